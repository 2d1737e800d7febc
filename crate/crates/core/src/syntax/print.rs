use std::fmt;

use super::pml::PmlFormula;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Op {
    Iff,
    Implies,
    Or,
    And,
}

fn binary(f: &PmlFormula) -> Option<(Op, &PmlFormula, &PmlFormula)> {
    match f {
        PmlFormula::And(a, b) => Some((Op::And, a, b)),
        PmlFormula::Or(a, b) => Some((Op::Or, a, b)),
        PmlFormula::Implies(a, b) => Some((Op::Implies, a, b)),
        PmlFormula::Iff(a, b) => Some((Op::Iff, a, b)),
        _ => None,
    }
}

fn symbol(op: Op) -> &'static str {
    match op {
        Op::Iff => "<->",
        Op::Implies => "->",
        Op::Or => "|",
        Op::And => "&",
    }
}

/// Index suffix in the one-based surface syntax; pair 0 prints unindexed.
fn idx(i: usize) -> String {
    if i == 0 {
        String::new()
    } else {
        (i + 1).to_string()
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, child: &PmlFormula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

/// Minimal-parenthesis printing. A binary operand is parenthesised unless it is
/// the same operator on its associative side, so mixed `&`/`|` always get
/// explicit grouping.
impl fmt::Display for PmlFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((op, a, b)) = binary(self) {
            let left_assoc = op != Op::Implies;
            let left_bare = left_assoc && binary(a).is_some_and(|(o, ..)| o == op);
            let right_bare = !left_assoc && binary(b).is_some_and(|(o, ..)| o == op);
            write_operand(f, a, binary(a).is_some() && !left_bare)?;
            write!(f, " {} ", symbol(op))?;
            return write_operand(f, b, binary(b).is_some() && !right_bare);
        }
        let (prefix, body) = match self {
            PmlFormula::Atom(a) => return write!(f, "{a}"),
            PmlFormula::PoisonAtom(0) => return write!(f, "#p"),
            PmlFormula::PoisonAtom(i) => return write!(f, "#p_{}", i + 1),
            PmlFormula::True => return write!(f, "true"),
            PmlFormula::False => return write!(f, "false"),
            PmlFormula::Not(a) => ("~".to_string(), a),
            PmlFormula::Diamond(i, a) => (format!("<{}>", idx(*i)), a),
            PmlFormula::Box(i, a) => (format!("[{}]", idx(*i)), a),
            PmlFormula::PoisonDiamond(i, a) => (format!("<#{}>", idx(*i)), a),
            PmlFormula::PoisonBox(i, a) => (format!("[#{}]", idx(*i)), a),
            PmlFormula::UDiamond(a) => ("<U>".to_string(), a),
            PmlFormula::UBox(a) => ("[U]".to_string(), a),
            _ => unreachable!("binary handled above"),
        };
        f.write_str(&prefix)?;
        write_operand(f, body, binary(body).is_some())
    }
}
