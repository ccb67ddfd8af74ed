//! Numerical sets, their Young diagrams, the bonded, end-to-end and conjoint
//! sums, and decompositions of symmetric and almost symmetric sets.
//!
//! A numerical set is stored by its small elements `[0, r_1, ..., r_n]`,
//! where `r_n` is the conductor and every integer past it belongs to the set.
//!
//! ```
//! use numset_core::{partition_of, NumericalSet};
//!
//! let r: NumericalSet = "0,4,6,7,9,10,12".parse().unwrap();
//! assert_eq!(r.frobenius(), 11);
//! assert_eq!(partition_of(&r).unwrap().to_string(), "[6,4,2,1,1,1]");
//! ```

pub mod census;
pub mod decompose;
pub mod diagram;
pub mod error;
pub mod numerical_set;
pub mod sum;

pub use decompose::{
    closure_conditions, closure_sum, collapse, compose_symmetric, decompose,
    decompose_almost_symmetric, decompose_almost_symmetric_semigroup, decompose_symmetric,
    decompose_symmetric_semigroup, pf_block, symmetric_witnesses, ClosureShape, Decomposition,
    DualForm, PfBlockInfo, SymmetricShape,
};
pub use diagram::{
    column_hook_set, hook_grid, is_semigroup_via_hooks, numerical_set_of, partition_of, render,
    render_partition, union_of_column_hook_sets, HookGrid, Partition, RenderFormat,
};
pub use error::{Error, Result};
pub use numerical_set::{InvariantReport, NumericalSet};
pub use sum::{fold_partitions, fold_sets, sum_gaps, sum_partitions, sum_sets, SumKind};
