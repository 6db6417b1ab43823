pub mod autgroup;
pub mod combinatorics;
pub mod error;
pub mod fault;
pub mod graph;
pub mod lab;
pub mod perm;
pub mod subiso;
