//! Structured real-form and symmetric-space labels.
//!
//! Labels are data: a family, optional subscript and twist superscript, and
//! arguments that are linear expressions in the table parameters `n`, `p`,
//! `q`. Rendering substitutes whichever parameters are known.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::degree0::{Degree0Type, SimpleFactor};

/// Values substituted for the table parameters during rendering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Env {
    pub n: Option<i64>,
    pub p: Option<i64>,
    pub q: Option<i64>,
}

impl Env {
    pub fn with_n(n: i64) -> Self {
        Env { n: Some(n), p: None, q: None }
    }
}

/// `a·n + b·p + c·q + d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lin {
    pub n: i64,
    pub p: i64,
    pub q: i64,
    pub c: i64,
}

impl Lin {
    pub const fn new(n: i64, p: i64, q: i64, c: i64) -> Self {
        Lin { n, p, q, c }
    }
    pub const fn k(c: i64) -> Self {
        Lin::new(0, 0, 0, c)
    }
    pub const fn n(a: i64, c: i64) -> Self {
        Lin::new(a, 0, 0, c)
    }
    pub const fn p(a: i64, c: i64) -> Self {
        Lin::new(0, a, 0, c)
    }
    pub const fn q(a: i64, c: i64) -> Self {
        Lin::new(0, 0, a, c)
    }

    /// Fold known parameters into the constant term.
    pub fn substitute(&self, env: &Env) -> Lin {
        let mut out = *self;
        for (coef, val) in [(&mut out.n, env.n), (&mut out.p, env.p), (&mut out.q, env.q)] {
            if let Some(v) = val {
                out.c += *coef * v;
                *coef = 0;
            }
        }
        out
    }

    pub fn value(&self, env: &Env) -> Option<i64> {
        let s = self.substitute(env);
        (s.n == 0 && s.p == 0 && s.q == 0).then_some(s.c)
    }

    pub fn render(&self, env: &Env) -> String {
        let s = self.substitute(env);
        let mut out = String::new();
        for (coef, sym) in [(s.n, "n"), (s.p, "p"), (s.q, "q")] {
            push_term(&mut out, coef, sym);
        }
        if s.c != 0 {
            push_term(&mut out, s.c, "");
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn push_term(out: &mut String, coef: i64, sym: &str) {
    if coef == 0 {
        return;
    }
    if coef < 0 {
        out.push('−');
    } else if !out.is_empty() {
        out.push('+');
    }
    let a = coef.abs();
    if a != 1 || sym.is_empty() {
        let _ = write!(out, "{a}");
    }
    out.push_str(sym);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Su,
    Sl,
    So,
    Sp,
    SoStar,
    /// `S(U × U)`, the determinant-one part of a product of unitary groups.
    S,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subscript {
    MinusOne,
    One,
    S,
    /// `rⁿ` with the exponent a table expression.
    RPow(Lin),
    RS,
    SigmaV,
    SigmaS,
    Gamma,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Arg {
    Lin(Lin),
    Reals,
    Quaternions,
    /// A literal sum kept unevaluated, such as `1+1`.
    Sum(Vec<Lin>),
    /// Product of unitary factors inside `S(…)`.
    Product(Vec<Label>),
}

/// One algebra or group symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub family: Family,
    pub subscript: Option<Subscript>,
    pub twist: Option<u8>,
    pub args: Vec<Arg>,
}

const SUB_DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
const SUP_DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn script(s: &str, digits: &[char; 10], letters: &[(char, char)]) -> String {
    s.chars()
        .map(|c| match c {
            '0'..='9' => digits[c as usize - '0' as usize],
            '−' | '-' => if digits == &SUB_DIGITS { '₋' } else { '⁻' },
            '+' => if digits == &SUB_DIGITS { '₊' } else { '⁺' },
            other => letters.iter().find(|(a, _)| *a == other).map(|(_, b)| *b).unwrap_or(other),
        })
        .collect()
}

fn subscript_str(s: &str) -> String {
    script(s, &SUB_DIGITS, &[('n', 'ₙ'), ('p', 'ₚ'), ('s', 'ₛ'), ('r', 'ᵣ')])
}

fn superscript_str(s: &str) -> String {
    script(s, &SUP_DIGITS, &[('n', 'ⁿ'), ('p', 'ᵖ')])
}

impl Subscript {
    fn render(&self, env: &Env) -> String {
        match self {
            Subscript::MinusOne => "₋₁".into(),
            Subscript::One => "₁".into(),
            Subscript::S => "ₛ".into(),
            Subscript::RPow(e) => format!("ᵣ{}", superscript_str(&e.render(env))),
            Subscript::RS => "ᵣₛ".into(),
            Subscript::SigmaV => "_σᵥ".into(),
            Subscript::SigmaS => "_σₛ".into(),
            Subscript::Gamma => "_γ".into(),
        }
    }
}

impl Label {
    pub fn new(family: Family, args: Vec<Arg>) -> Self {
        Label { family, subscript: None, twist: None, args }
    }

    pub fn sub(mut self, s: Subscript) -> Self {
        self.subscript = Some(s);
        self
    }

    pub fn twist(mut self, t: u8) -> Self {
        self.twist = Some(t);
        self
    }

    /// Render as a Lie algebra (lower case) or a group (upper case).
    pub fn render(&self, env: &Env, group: bool) -> String {
        let base = match (self.family, group) {
            (Family::Su, false) => "su",
            (Family::Su, true) => "SU",
            (Family::Sl, false) => "sl",
            (Family::Sl, true) => "SL",
            (Family::So, false) => "so",
            (Family::So, true) => "SO",
            (Family::Sp, false) => "sp",
            (Family::Sp, true) => "SP",
            (Family::SoStar, false) => "so*",
            (Family::SoStar, true) => "SO*",
            (Family::S, false) => "s",
            (Family::S, true) => "S",
            (Family::U, false) => "u",
            (Family::U, true) => "U",
        };
        let mut out = base.to_string();
        if let Some(s) = &self.subscript {
            out.push_str(&s.render(env));
        }
        if let Some(t) = self.twist {
            let _ = write!(out, "⁽{}⁾", superscript_str(&t.to_string()));
        }
        if self.family == Family::U {
            // Unitary factors are written with a subscript size, as in U₁×U₁.
            if let Some(Arg::Lin(l)) = self.args.first() {
                out.push_str(&subscript_str(&l.render(env)));
            }
            return out;
        }
        let args: Vec<String> = self
            .args
            .iter()
            .map(|a| match a {
                Arg::Lin(l) => l.render(env),
                Arg::Reals => "ℝ".into(),
                Arg::Quaternions => "ℍ".into(),
                Arg::Sum(terms) => terms.iter().map(|t| t.render(env)).collect::<Vec<_>>().join("+"),
                Arg::Product(fs) => fs.iter().map(|f| f.render(env, group)).collect::<Vec<_>>().join("×"),
            })
            .collect();
        let _ = write!(out, "({})", args.join(","));
        out
    }
}

/// Direct sum of algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sum(pub Vec<Label>);

impl Sum {
    pub fn render(&self, env: &Env, group: bool) -> String {
        self.0.iter().map(|l| l.render(env, group)).collect::<Vec<_>>().join("⊕")
    }
}

/// `G/H` with `H` a direct sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quotient {
    pub numerator: Label,
    pub denominator: Sum,
}

impl Quotient {
    pub fn render(&self, env: &Env) -> String {
        format!("{}/{}", self.numerator.render(env, true), self.denominator.render(env, true))
    }
}

/// Degree-zero type implied by a fixed-algebra label once every size is known.
///
/// Twist superscripts and the `±1` subscripts do not change the type of the
/// constant-term algebra, so only the family and size are used.
pub fn implied_degree0(fixed: &Sum, env: &Env) -> Option<Degree0Type> {
    let mut factors = Vec::new();
    let mut center = 0;
    let push_a = |k: i64, f: &mut Vec<SimpleFactor>| {
        if k >= 1 {
            f.push(SimpleFactor { family: 'A', rank: k as usize });
        }
    };
    for l in &fixed.0 {
        let size = || match l.args.first() {
            Some(Arg::Lin(x)) => x.value(env),
            _ => None,
        };
        match l.family {
            Family::Su | Family::Sl => push_a(size()? - 1, &mut factors),
            Family::Sp => factors.push(SimpleFactor { family: 'C', rank: size()? as usize }),
            Family::SoStar | Family::U => {
                push_a(size()? - 1, &mut factors);
                center += 1;
            }
            Family::So => {
                let m = size()?;
                match m {
                    0 | 1 => {}
                    2 => center += 1,
                    3 => push_a(1, &mut factors),
                    4 => {
                        push_a(1, &mut factors);
                        push_a(1, &mut factors);
                    }
                    6 => push_a(3, &mut factors),
                    m if m % 2 == 1 => factors.push(SimpleFactor { family: 'B', rank: (m / 2) as usize }),
                    m => factors.push(SimpleFactor { family: 'D', rank: (m / 2) as usize }),
                }
            }
            Family::S => {
                let Some(Arg::Product(us)) = l.args.first() else { return None };
                for u in us {
                    let Some(Arg::Lin(x)) = u.args.first() else { return None };
                    push_a(x.value(env)? - 1, &mut factors);
                }
                center += us.len().saturating_sub(1);
            }
        }
    }
    Some(Degree0Type::from_parts(factors, center))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su(args: Vec<Arg>) -> Label {
        Label::new(Family::Su, args)
    }

    #[test]
    fn linear_expressions() {
        let e = Env::default();
        assert_eq!(Lin::n(2, -1).render(&e), "2n−1");
        assert_eq!(Lin::new(0, 1, 1, 0).render(&e), "p+q");
        assert_eq!(Lin::k(0).render(&e), "0");
        assert_eq!(Lin::n(-1, 0).render(&e), "−n");
        assert_eq!(Lin::n(2, -1).render(&Env::with_n(3)), "5");
        assert_eq!(Lin::new(2, -1, 0, 0).render(&Env::with_n(3)), "−p+6");
    }

    #[test]
    fn algebra_and_group_rendering() {
        let e = Env::default();
        let l = su(vec![Arg::Lin(Lin::p(1, 0)), Arg::Lin(Lin::q(1, 0))]).sub(Subscript::One).twist(1);
        assert_eq!(l.render(&e, false), "su₁⁽¹⁾(p,q)");
        assert_eq!(l.render(&e, true), "SU₁⁽¹⁾(p,q)");
        let u1 = Label::new(Family::U, vec![Arg::Lin(Lin::k(1))]);
        let s = Label::new(Family::S, vec![Arg::Product(vec![u1.clone(), u1])]).sub(Subscript::One).twist(1);
        assert_eq!(s.render(&e, true), "S₁⁽¹⁾(U₁×U₁)");
        let sl = Label::new(Family::Sl, vec![Arg::Lin(Lin::n(1, 0)), Arg::Quaternions]).sub(Subscript::RPow(Lin::n(1, 0))).twist(1);
        assert_eq!(sl.render(&e, false), "slᵣⁿ⁽¹⁾(n,ℍ)");
        assert_eq!(sl.render(&Env::with_n(3), false), "slᵣ³⁽¹⁾(3,ℍ)");
        let sum = su(vec![Arg::Sum(vec![Lin::k(1), Lin::k(1)])]).twist(1);
        assert_eq!(sum.render(&e, true), "SU⁽¹⁾(1+1)");
    }

    #[test]
    fn implied_types() {
        let e = Env::with_n(2);
        let so = |m: i64| Sum(vec![Label::new(Family::So, vec![Arg::Lin(Lin::k(m))])]);
        assert_eq!(implied_degree0(&so(2), &e).unwrap().to_string(), "center(1)");
        assert_eq!(implied_degree0(&so(3), &e).unwrap().to_string(), "A1");
        assert_eq!(implied_degree0(&so(5), &e).unwrap().to_string(), "B2");
        let u = |k| Label::new(Family::U, vec![Arg::Lin(Lin::k(k))]);
        let s = Sum(vec![Label::new(Family::S, vec![Arg::Product(vec![u(2), u(1)])])]);
        assert_eq!(implied_degree0(&s, &e).unwrap().to_string(), "A1 + center(1)");
        let free = Sum(vec![su(vec![Arg::Lin(Lin::p(1, 0))])]);
        assert!(implied_degree0(&free, &e).is_none());
    }
}
