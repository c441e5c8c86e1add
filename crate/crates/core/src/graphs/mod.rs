//! Boards: construction, parsing, products, and structural queries.

pub mod enumerate;
pub mod family;
mod graph;
mod io;
mod product;
mod retract;
mod spec;

pub use graph::{Graph, GraphError, Vertex, MAX_VERTICES};
pub use io::{graph_from_json, graph_to_json, read_graph, write_graph, GraphIoError};
pub use product::{coords, pair_id, product, ProductKind};
pub use retract::{is_retraction, RetractionError, RetractionMap};
pub use spec::{parse_graph_spec, GraphSpec, SpecBuildError, SpecError};
