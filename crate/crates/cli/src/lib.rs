//! Command-line front end for the `powergraph` library: the group-spec
//! language, corpus files, verification checks, exports and reports.

pub mod analyze;
pub mod checks;
pub mod corpus;
pub mod export;
pub mod spec;
