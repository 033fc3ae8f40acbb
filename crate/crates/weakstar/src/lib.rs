//! File formats, reports, named graphs, invariant scans and the command
//! line front end over `weakstar-core`.

pub mod cli;
pub mod corpus;
pub mod formats;
pub mod report;
pub mod scan;
