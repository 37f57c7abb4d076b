//! Collocation nodes and assembly of the operator matrix.

mod assemble;
mod matrix;
mod nodes;

pub use assemble::{build_matrix, build_matrix_with, Assembly};
pub use matrix::{row_apply, MatrixMeta, OperatorMatrix};
pub use nodes::{make_nodes, NodeSet, NODE_RULE};
