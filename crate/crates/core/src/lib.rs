pub mod corpus;
pub mod error;
pub mod hom;
pub mod incidence;
pub mod lab;
pub mod linalg;
pub mod module;
pub mod ring;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::{Caps, Exceeded, Limit, Verdict, Witness};
