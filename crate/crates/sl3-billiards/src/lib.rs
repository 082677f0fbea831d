//! File formats, rendering, reports and the command-line front end for
//! [`sl3_billiards_core`].

pub mod cli;
pub mod diagram;
pub mod document;
pub mod error;
pub mod external;
pub mod growth;
pub mod parallel;
pub mod svg;

pub use diagram::{AlcoveDiagram, Collapse, Placement, Symbol};
pub use document::{PatternDocument, PointEntry};
pub use error::{IoError, Result};
pub use external::{diff_external, zeta_table, DiffMode, DiffReport, ExternalTable};
pub use growth::{growth_report, GrowthReport};
