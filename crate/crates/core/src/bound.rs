//! Named inequality instances with slack and equality-case bookkeeping.

/// Tolerance for treating a slack as an exact equality.
pub const EQUALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Gt,
    Le,
    Lt,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Le => "<=",
            Relation::Lt => "<",
        }
    }

    pub fn is_strict(self) -> bool {
        matches!(self, Relation::Gt | Relation::Lt)
    }
}

/// One checked inequality: `lhs relation rhs` with the slack signed so
/// that nonnegative slack means the bound holds.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub slack: f64,
    /// |slack| within `EQUALITY_TOL`.
    pub equality: bool,
    /// The stated equality condition evaluated structurally, when the
    /// bound has one.
    pub equality_predicted: Option<bool>,
    /// Auxiliary values that went into the check, for reporting.
    pub params: Vec<(&'static str, f64)>,
}

impl BoundCheck {
    pub fn new(name: &'static str, lhs: f64, rhs: f64, relation: Relation) -> BoundCheck {
        let slack = match relation {
            Relation::Ge | Relation::Gt => lhs - rhs,
            Relation::Le | Relation::Lt => rhs - lhs,
        };
        BoundCheck {
            name,
            lhs,
            rhs,
            relation,
            slack,
            equality: slack.abs() <= EQUALITY_TOL,
            equality_predicted: None,
            params: Vec::new(),
        }
    }

    pub fn with_equality_predicted(mut self, predicted: bool) -> BoundCheck {
        self.equality_predicted = Some(predicted);
        self
    }

    pub fn with_param(mut self, key: &'static str, value: f64) -> BoundCheck {
        self.params.push((key, value));
        self
    }

    /// The inequality holds up to tolerance (strictness not required).
    pub fn holds(&self) -> bool {
        self.slack >= -EQUALITY_TOL
    }

    /// A strict relation holds with visible margin.
    pub fn strict_ok(&self) -> bool {
        self.slack > EQUALITY_TOL
    }

    /// Numeric violation: the stated direction fails beyond tolerance.
    pub fn violated(&self) -> bool {
        !self.holds()
    }

    /// Boundary finding: a strict relation met only with equality.
    pub fn boundary(&self) -> bool {
        self.relation.is_strict() && self.holds() && !self.strict_ok()
    }

    /// The numeric equality flag and the structural prediction agree
    /// (vacuously true when no prediction is attached).
    pub fn equality_consistent(&self) -> bool {
        self.equality_predicted.map_or(true, |p| p == self.equality)
    }
}
