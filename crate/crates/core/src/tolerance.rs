/// Numerical thresholds shared by the whole construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Single products and other one-step expressions.
    pub single: f64,
    /// Expressions that chain several products.
    pub composite: f64,
    /// Relative norm below which a spinor coordinate counts as zero.
    pub zero: f64,
    /// Absolute length below which a normalized edge counts as zero.
    pub degenerate_edge: f64,
    /// Frame orthonormality and polygon closure/perimeter checks.
    pub structure: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        single: 1e-12,
        composite: 1e-9,
        zero: 1e-12,
        degenerate_edge: 1e-12,
        structure: 1e-10,
    };

    pub fn with_composite(self, composite: f64) -> Self {
        Tolerances { composite, ..self }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
