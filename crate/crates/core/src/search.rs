use serde::Serialize;

/// Outcome of a budgeted exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "witness")]
pub enum Verdict<T> {
    Found(T),
    /// The search space was exhausted without a witness.
    Refuted,
    BudgetExceeded,
}

impl<T> Verdict<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Verdict::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            Verdict::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted)
    }

    pub fn is_exhausted_budget(&self) -> bool {
        matches!(self, Verdict::BudgetExceeded)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Verdict<U> {
        match self {
            Verdict::Found(t) => Verdict::Found(f(t)),
            Verdict::Refuted => Verdict::Refuted,
            Verdict::BudgetExceeded => Verdict::BudgetExceeded,
        }
    }
}
