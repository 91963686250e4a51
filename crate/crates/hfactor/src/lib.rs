//! File formats, verification campaigns and reporting on top of
//! [`hfactor_core`].

pub mod graph6;
pub mod report;
pub mod verifier;

pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6, Graph6Error};
pub use report::{write_case_csv, VerificationReport, Violation};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] hfactor_core::Error),
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
