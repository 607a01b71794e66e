//! Real-root counting by Sturm chains, the totally-real and interval
//! confinement predicates built on it, and a floating-point root oracle.
//!
//! The exact predicates never consult the numeric oracle.

mod approx;
mod sturm;

pub use approx::{approx_roots, ApproxRoot, ApproxRoots};
pub use sturm::{
    all_roots_in, count_real_roots, filter_box, is_totally_real, sturm_chain, OpenInterval,
    SturmChain,
};
