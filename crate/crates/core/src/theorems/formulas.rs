use super::TheoremId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaValue {
    Value(usize),
    NotApplicable(String),
}

impl FormulaValue {
    pub fn value(&self) -> Option<usize> {
        match self {
            FormulaValue::Value(v) => Some(*v),
            FormulaValue::NotApplicable(_) => None,
        }
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Closed-form paired disjunctive domination number for the formula ids.
///
/// `params` is `[n]` for single-parameter families and `[n, m]` for the
/// two-parameter ones (complete bipartite, double star).
pub fn formula_value(id: TheoremId, params: &[usize]) -> FormulaValue {
    use FormulaValue::*;
    let na = |why: &str| NotApplicable(format!("{id}: {why}"));
    let one = |min: usize| match params {
        [n] if *n >= min => Ok(*n),
        [n] => Err(na(&format!("requires n >= {min}, got {n}"))),
        _ => Err(na("expects one parameter")),
    };
    let two = |min: usize| match params {
        [a, b] if *a >= min && *b >= min => Ok((*a, *b)),
        [a, b] => Err(na(&format!(
            "requires both parameters >= {min}, got {a}, {b}"
        ))),
        _ => Err(na("expects two parameters")),
    };
    let result = match id {
        TheoremId::T34Cycle => one(3).map(|n| 2 * ceil_div(n, 5)),
        TheoremId::T34Path => one(2).map(|n| 2 * ceil_div(n + 1, 5)),
        TheoremId::T34Complete => one(2).map(|_| 2),
        TheoremId::T34Bipartite | TheoremId::P43Bipartite => two(1).map(|_| 2),
        TheoremId::T44MidCycle => one(3).map(|n| 2 * ceil_div(n, 4)),
        TheoremId::T45MidPath => one(2).map(|n| match n % 4 {
            2 | 3 => 2 * ceil_div(n - 1, 4),
            _ => 2 * ceil_div(n - 1, 4) + 2,
        }),
        TheoremId::P46Friendship => one(2).map(|_| 2),
        TheoremId::T47DoubleStar => match two(1) {
            Ok((n, m)) if n < m => Err(na(&format!("requires n >= m, got {n}, {m}"))),
            other => other.map(|_| 4),
        },
        TheoremId::P42MaxDeg | TheoremId::P57Join => Ok(2),
        TheoremId::T35Bounds
        | TheoremId::O31Chain
        | TheoremId::O32Total
        | TheoremId::T41Certificate
        | TheoremId::L51SdRestriction
        | TheoremId::L52Deletion
        | TheoremId::T53PathBound
        | TheoremId::T54TreeBound
        | TheoremId::C55StrongSupport
        | TheoremId::C56NoStrongSupport => Err(na("relational statement without a closed form")),
    };
    match result {
        Ok(v) => Value(v),
        Err(e) => e,
    }
}
