//! Benchmark fixtures shared by the criterion targets.

use yb_core::algebras::{final_3leibniz_2d, nilpotent3, octonion_3leibniz, ThreeLeibnizAlgebra};

/// 3-Leibniz algebras of increasing size, by name.
pub fn three_leibniz_corpus() -> Vec<(&'static str, ThreeLeibnizAlgebra)> {
    vec![
        ("final-2d", final_3leibniz_2d()),
        ("nilpotent", nilpotent3()),
        ("octonions", octonion_3leibniz()),
    ]
}
