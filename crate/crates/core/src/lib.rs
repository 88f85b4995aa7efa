//! Exact singularity invariants and a coupled Kerr dimer comb simulator.

pub mod poly;
pub mod groebner;
pub mod singularity;
pub mod dimer;
pub mod comb;
pub mod cli;
