//! Abstract graphs that type drawings are guaranteed to contain without
//! crossings, and the search tools around them.

mod embed;
mod extract;
mod graph;
mod ramsey;
mod recognize;

pub use embed::{embed_structure, verify_plane_embedding, EmbeddingCheck};
pub use extract::{extract_disjoint_edges, extract_from_drawing, index_family, Certificate};
pub use graph::{Labels, StructureGraph};
pub use ramsey::{classify_quadruple, monochromatic_subset, monochromatic_subset_by, quadruple_labels, RamseyQuery};
pub use recognize::{recognize_structure, Caterpillar, Obstruction, Recognition, SquidCertificate};
