//! Plane embeddings, vertex-face incidence, nice subgraphs and the
//! constructive certificates for 3-connected planar graphs and for graphs
//! excluding a complete bipartite minor.

pub mod certificate;
pub mod dmp;
pub mod embedding;
pub mod general;
pub mod generate;
pub mod nice;
pub mod regions;
pub mod saturate;

pub use dmp::{planar_embedding, PlanarityError};
pub use embedding::{Embedding, EmbeddingError, Face};
pub use nice::{check_nice, nice_subgraph, nice_subgraph_within, NiceError, NiceSubgraph, NiceViolation};
pub use regions::Regions;
pub use saturate::{saturate_visibility, transfer_to_subgraph, TransferError};
pub use certificate::{planar_caps, planar_certificate, ComponentStep, PlanarCertError, PlanarCertificate, PlanarRoute, Round, PLANAR_THRESHOLD};
pub use general::{general_caps, general_certificate, general_certificate_with, GeneralCertError, GeneralCertificate, MinorParams, ParamError, PeelStep};
