//! The partial L-function `∏_{p ∉ S} L(s, α_p ⊗ π_p) L(2s, Λ², π_p)` over
//! the rationals, assembled as a Dirichlet series from per-prime Satake
//! data.

mod dirichlet;
mod table;

pub use dirichlet::{
    assemble, assemble_with, evaluate, finite_euler_product, DirichletJson, DirichletSeries,
    Evaluation, FactorSelection,
};
pub use table::{ingest, ingest_str, IngestError, SatakeTable};
