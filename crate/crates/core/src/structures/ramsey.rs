use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::{adjacent, matchings};
use crate::error::{Error, Result};
use crate::generators::TypeKind;
use crate::geometry::{key, CrossingMatrix};

/// Class of a sorted quadruple: the first of `(ij|kl)`, `(ik|jl)`, `(il|jk)`
/// whose two edges are disjoint.
pub fn classify_quadruple(m: &CrossingMatrix, quad: [usize; 4]) -> Result<TypeKind> {
    let mut q = quad;
    q.sort_unstable();
    let edges: Vec<_> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).map(|(a, b)| key(q[a], q[b])).collect();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            let p = m
                .between(e, f)
                .ok_or_else(|| Error::PreconditionViolated(format!("edges {e:?} and {f:?} are not in the drawing")))?;
            if adjacent(e, f) && p.crossing_count > 0 {
                return Err(Error::PreconditionViolated(format!("adjacent edges {e:?} and {f:?} cross")));
            }
        }
    }
    for (kind, (e, f)) in TypeKind::ALL.into_iter().zip(matchings(q)) {
        if m.between(e, f).is_some_and(|p| p.disjoint) {
            return Ok(kind);
        }
    }
    Err(Error::NoClass(q))
}

/// Labels of every sorted quadruple of vertices `0..n`.
pub fn quadruple_labels(m: &CrossingMatrix, n: usize) -> Result<BTreeMap<Vec<usize>, TypeKind>> {
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    out.insert(vec![i, j, k, l], classify_quadruple(m, [i, j, k, l])?);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyQuery {
    /// Ground set `0..n`.
    pub n: usize,
    /// Size of the subset to find.
    pub m: usize,
    /// Tuple size of the labels.
    pub r: usize,
    /// Maximum number of candidate extensions examined.
    pub budget: u64,
}

struct Search<'a, L, F> {
    q: RamseyQuery,
    label: &'a F,
    spent: u64,
    chosen: Vec<usize>,
    colour: Vec<Option<L>>,
}

impl<L: Clone + Eq, F: Fn(&[usize]) -> Result<L>> Search<'_, L, F> {
    /// Every r-subset of `chosen + [x]` containing `x` must carry `want`
    /// (or fix it, when no r-subset existed yet).
    fn fits(&self, x: usize, want: &Option<L>) -> Result<Option<Option<L>>> {
        let r = self.q.r;
        let s = self.chosen.len();
        if r == 0 || s + 1 < r {
            return Ok(Some(want.clone()));
        }
        let mut want = want.clone();
        let mut idx: Vec<usize> = (0..r - 1).collect();
        let mut tuple = vec![0; r];
        loop {
            for (t, &i) in idx.iter().enumerate() {
                tuple[t] = self.chosen[i];
            }
            tuple[r - 1] = x;
            let l = (self.label)(&tuple)?;
            match &want {
                Some(w) if *w != l => return Ok(None),
                Some(_) => {}
                None => want = Some(l),
            }
            // Next (r-1)-combination of 0..s.
            let mut t = r - 1;
            loop {
                if t == 0 {
                    return Ok(Some(want));
                }
                t -= 1;
                if idx[t] < s - (r - 1 - t) {
                    idx[t] += 1;
                    for u in t + 1..r - 1 {
                        idx[u] = idx[u - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn dfs(&mut self, from: usize) -> Result<bool> {
        if self.chosen.len() == self.q.m {
            return Ok(true);
        }
        let need = self.q.m - self.chosen.len();
        for x in from..self.q.n {
            if self.q.n - x < need {
                break;
            }
            self.spent += 1;
            if self.spent > self.q.budget {
                return Err(Error::BudgetExceeded(self.q.budget));
            }
            let want = self.colour.last().cloned().flatten();
            if let Some(next) = self.fits(x, &want)? {
                self.chosen.push(x);
                self.colour.push(next);
                if self.dfs(x + 1)? {
                    return Ok(true);
                }
                self.chosen.pop();
                self.colour.pop();
            }
        }
        Ok(false)
    }
}

/// Lexicographically first `m`-subset of `0..n` whose `r`-subsets all share
/// one label. `Ok(None)` means the search finished without finding one.
pub fn monochromatic_subset_by<L, F>(q: RamseyQuery, label: F) -> Result<Option<Vec<usize>>>
where
    L: Clone + Eq,
    F: Fn(&[usize]) -> Result<L>,
{
    let mut s = Search { q, label: &label, spent: 0, chosen: Vec::new(), colour: Vec::new() };
    Ok(s.dfs(0)?.then_some(s.chosen))
}

/// [`monochromatic_subset_by`] over an explicit table of sorted tuples.
pub fn monochromatic_subset<L: Clone + Eq>(
    labels: &BTreeMap<Vec<usize>, L>,
    q: RamseyQuery,
) -> Result<Option<Vec<usize>>> {
    monochromatic_subset_by(q, |t| {
        labels.get(t).cloned().ok_or_else(|| Error::PreconditionViolated(format!("no label for {t:?}")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_convex, gen_flower};
    use crate::geometry::{crossing_matrix, Mode};

    fn pairs(n: usize, f: impl Fn(usize, usize) -> u8) -> BTreeMap<Vec<usize>, u8> {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (vec![i, j], f(i, j))).collect()
    }

    #[test]
    fn convex_quadruple_is_class_one() {
        let m = crossing_matrix(&gen_convex(4), Mode::Strict).unwrap();
        assert_eq!(classify_quadruple(&m, [0, 1, 2, 3]).unwrap(), TypeKind::I);
    }

    #[test]
    fn flower_breaks_the_precondition() {
        let m = crossing_matrix(&gen_flower(4).unwrap(), Mode::Strict).unwrap();
        assert!(matches!(classify_quadruple(&m, [0, 1, 2, 3]), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn uniform_labels_give_a_prefix() {
        let labels = pairs(7, |_, _| 0);
        let q = RamseyQuery { n: 7, m: 5, r: 2, budget: 1000 };
        assert_eq!(monochromatic_subset(&labels, q).unwrap(), Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn planted_triangle_is_found() {
        // Bipartite colouring between {0,1,2} and {3,4,5} with one planted
        // triangle 1, 3, 5 recoloured.
        let tri = [1, 3, 5];
        let labels =
            pairs(6, |i, j| if tri.contains(&i) && tri.contains(&j) { 1 } else { u8::from((i < 3) != (j < 3)) });
        // Brute force: the lexicographically first monochromatic triple.
        let mut expect = None;
        'outer: for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    let l = [labels[&vec![a, b]], labels[&vec![a, c]], labels[&vec![b, c]]];
                    if l[0] == l[1] && l[1] == l[2] {
                        expect = Some(vec![a, b, c]);
                        break 'outer;
                    }
                }
            }
        }
        let q = RamseyQuery { n: 6, m: 3, r: 2, budget: 1000 };
        assert_eq!(monochromatic_subset(&labels, q).unwrap(), expect);
    }

    #[test]
    fn exhausted_search_and_budget() {
        // A 5-cycle colouring of K5 has no monochromatic triangle.
        let labels = pairs(5, |i, j| u8::from(matches!(j - i, 1 | 4)));
        let q = RamseyQuery { n: 5, m: 3, r: 2, budget: 1000 };
        assert_eq!(monochromatic_subset(&labels, q).unwrap(), None);
        let q = RamseyQuery { budget: 3, ..q };
        assert!(matches!(monochromatic_subset(&labels, q), Err(Error::BudgetExceeded(3))));
    }

    #[test]
    fn four_tuples() {
        let labels: BTreeMap<Vec<usize>, u8> = (0..6)
            .flat_map(|a| {
                (a + 1..6).flat_map(move |b| (b + 1..6).flat_map(move |c| (c + 1..6).map(move |d| vec![a, b, c, d])))
            })
            .map(|t| {
                let l = u8::from(t.contains(&0));
                (t, l)
            })
            .collect();
        let q = RamseyQuery { n: 6, m: 5, r: 4, budget: 10_000 };
        assert_eq!(monochromatic_subset(&labels, q).unwrap(), Some(vec![1, 2, 3, 4, 5]));
    }
}
