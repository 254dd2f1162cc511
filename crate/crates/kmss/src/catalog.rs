//! Classification catalog of real forms keyed by canonical Vogan diagrams.
//!
//! Each row names a real form, the Vogan diagram that represents it (an
//! automorphism recipe and a painting written in the table parameters), its
//! fixed algebra and the pair of symmetric spaces. Rows are instantiated at a
//! concrete rank, reduced to canonical form, and compared with the reduced
//! input diagram.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cartan::{build_affine_diagram, Series};
use crate::degree0::Degree0Type;
use crate::labels::{implied_degree0, Arg, Env, Family, Label, Lin, Quotient, Subscript, Sum};
use crate::vogan::{automorphism_from_map, make_vogan, reduce_borel_siebenthal, VoganDiagram, VoganError};

/// Source table of a catalog row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Table {
    /// `A₂ₙ₋₁⁽¹⁾`.
    I,
    /// `A₂ₙ⁽¹⁾`.
    II,
    /// `Bₙ⁽¹⁾`.
    III,
    /// `C₂ₙ₋₁⁽¹⁾`.
    IV,
    /// `C₂ₙ⁽¹⁾`.
    V,
    /// `Dₙ⁽¹⁾`, `n` even.
    VI,
    /// `Dₙ⁽¹⁾`, `n` odd.
    VII,
    /// Rank-one and rank-two cases computed from explicit automorphisms.
    Worked,
}

impl Table {
    pub const NUMBERED: [Table; 7] = [Table::I, Table::II, Table::III, Table::IV, Table::V, Table::VI, Table::VII];

    pub fn series(self) -> Series {
        match self {
            Table::I | Table::II | Table::Worked => Series::A,
            Table::III => Series::B,
            Table::IV | Table::V => Series::C,
            Table::VI | Table::VII => Series::D,
        }
    }

    /// Classical rank at table parameter `n`, if the table covers it.
    pub fn rank_at(self, n: i64) -> Option<usize> {
        let r = match self {
            Table::I | Table::IV => 2 * n - 1,
            Table::II | Table::V => 2 * n,
            Table::III => n,
            Table::VI if n % 2 == 0 => n,
            Table::VII if n % 2 != 0 => n,
            _ => return None,
        };
        let r = usize::try_from(r).ok()?;
        self.series().check_rank(r).ok().map(|_| r)
    }

    /// Table parameter `n` for a classical rank, if the table covers it.
    pub fn param_for_rank(self, rank: usize) -> Option<i64> {
        let r = rank as i64;
        let n = match self {
            Table::I | Table::IV if r % 2 == 1 => (r + 1) / 2,
            Table::II | Table::V if r % 2 == 0 => r / 2,
            Table::III | Table::VI | Table::VII => r,
            _ => return None,
        };
        (self.rank_at(n) == Some(rank)).then_some(n)
    }

    /// Affine diagram named by the table, e.g. `A₂ₙ₋₁⁽¹⁾`.
    pub fn caption(self) -> &'static str {
        match self {
            Table::I => "A₂ₙ₋₁⁽¹⁾",
            Table::II => "A₂ₙ⁽¹⁾",
            Table::III => "Bₙ⁽¹⁾",
            Table::IV => "C₂ₙ₋₁⁽¹⁾",
            Table::V => "C₂ₙ⁽¹⁾",
            Table::VI => "Dₙ⁽¹⁾, n even",
            Table::VII => "Dₙ⁽¹⁾, n odd",
            Table::Worked => "A₁⁽¹⁾ and A₂⁽¹⁾",
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Table::I => "I",
            Table::II => "II",
            Table::III => "III",
            Table::IV => "IV",
            Table::V => "V",
            Table::VI => "VI",
            Table::VII => "VII",
            Table::Worked => "worked",
        };
        f.write_str(s)
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("unknown table selector {0:?}; use A, B, C, D or a table numeral I..VII")]
pub struct UnknownTable(pub String);

/// Tables selected by a command-line style name at parameter `n`.
pub fn select_tables(selector: &str, n: i64) -> Result<Vec<Table>, UnknownTable> {
    let t = match selector.trim().to_ascii_uppercase().as_str() {
        "A" => vec![Table::I, Table::II],
        "A-ODD" | "I" => vec![Table::I],
        "A-EVEN" | "II" => vec![Table::II],
        "B" | "III" => vec![Table::III],
        "C" => vec![Table::IV, Table::V],
        "C-ODD" | "IV" => vec![Table::IV],
        "C-EVEN" | "V" => vec![Table::V],
        "D" if n % 2 == 0 => vec![Table::VI],
        "D" => vec![Table::VII],
        "D-EVEN" | "VI" => vec![Table::VI],
        "D-ODD" | "VII" => vec![Table::VII],
        "WORKED" => vec![Table::Worked],
        _ => return Err(UnknownTable(selector.to_string())),
    };
    Ok(t)
}

impl FromStr for Table {
    type Err = UnknownTable;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match select_tables(s, 0)?.as_slice() {
            [t] => Ok(*t),
            _ => Err(UnknownTable(s.to_string())),
        }
    }
}

/// Recipe for the diagram automorphism of a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutRecipe {
    Identity,
    /// `A`: `i ↦ −i`.
    Reflection,
    /// `A` with an even number of nodes: `i ↦ i + N/2`.
    HalfTurn,
    /// `A`: `i ↦ 1 − i`.
    TurnReflection,
    /// `B`: `0 ↔ 1`.
    SwapZeroOne,
    /// `C` and `D`: `i ↦ r − i`.
    Reversal,
    /// `D`: `0 ↔ 1` and `r−1 ↔ r`.
    SigmaV,
    /// `D`: `r−1 ↔ r`.
    SwapTail,
}

impl AutRecipe {
    fn map(self, series: Series, rank: usize) -> Option<Vec<usize>> {
        let n = rank + 1;
        let mut m: Vec<usize> = (0..n).collect();
        match (self, series) {
            (AutRecipe::Identity, _) => {}
            (AutRecipe::Reflection, Series::A) => m = (0..n).map(|i| (n - i) % n).collect(),
            (AutRecipe::HalfTurn, Series::A) if n.is_multiple_of(2) => m = (0..n).map(|i| (i + n / 2) % n).collect(),
            (AutRecipe::TurnReflection, Series::A) => m = (0..n).map(|i| (n + 1 - i) % n).collect(),
            (AutRecipe::SwapZeroOne, Series::B) => m.swap(0, 1),
            (AutRecipe::Reversal, Series::C | Series::D) => m = (0..n).map(|i| rank - i).collect(),
            (AutRecipe::SigmaV, Series::D) => {
                m.swap(0, 1);
                m.swap(rank - 1, rank);
            }
            (AutRecipe::SwapTail, Series::D) => m.swap(rank - 1, rank),
            _ => return None,
        }
        Some(m)
    }

    /// Symbol used in table rows.
    pub fn symbol(self) -> &'static str {
        match self {
            AutRecipe::Identity => "id",
            AutRecipe::Reflection => "s",
            AutRecipe::HalfTurn => "rⁿ",
            AutRecipe::TurnReflection => "rs",
            AutRecipe::SwapZeroOne | AutRecipe::SwapTail => "γ",
            AutRecipe::Reversal => "σ",
            AutRecipe::SigmaV => "σ_v",
        }
    }
}

/// A row whose fixed-algebra column admits two readings.
#[derive(Clone, Debug, PartialEq)]
pub struct Dispute {
    pub alternative: Sum,
    pub note: &'static str,
}

/// One row of a classification table.
#[derive(Clone, Debug)]
pub struct CatalogRow {
    pub id: &'static str,
    pub table: Table,
    pub name: Label,
    /// Value of `p+q` when the name carries a signature.
    pub pq_sum: Option<Lin>,
    pub min_n: i64,
    /// Exact classical rank for rows outside the parametrized tables.
    pub exact_rank: Option<usize>,
    pub automorphism: AutRecipe,
    pub painted: Vec<Lin>,
    /// Range of `p` as functions of `n`, both ends inclusive.
    pub p_range: Option<(fn(i64) -> i64, fn(i64) -> i64)>,
    pub fixed: Sum,
    pub compact_space: Option<Quotient>,
    pub noncompact_space: Option<Quotient>,
    pub dispute: Option<Dispute>,
    pub root_entry: Option<&'static str>,
}

impl CatalogRow {
    fn render_constraint(&self, env: &Env) -> Option<String> {
        let mut parts = Vec::new();
        if let Some(s) = &self.pq_sum {
            parts.push(format!("p+q={}", s.render(env)));
        }
        if self.min_n > 1 && self.exact_rank.is_none() {
            parts.push(format!("n≥{}", self.min_n));
        }
        (!parts.is_empty()).then(|| parts.join(", "))
    }

    fn render_vogan(&self, env: &Env) -> String {
        let nodes: Vec<String> = self.painted.iter().map(|l| l.render(env)).collect();
        let aut = match (self.automorphism, self.table) {
            (AutRecipe::Reversal, Table::VI | Table::VII) => "σ_s",
            (AutRecipe::HalfTurn, Table::Worked) => "r",
            (a, _) => a.symbol(),
        };
        format!("{aut}; painted {{{}}}", nodes.join(","))
    }
}

// ---------------------------------------------------------------------------
// Row data.

const N: Lin = Lin::n(1, 0);
const P: Lin = Lin::p(1, 0);
const QQ: Lin = Lin::q(1, 0);

fn l(x: Lin) -> Arg {
    Arg::Lin(x)
}
fn k(c: i64) -> Arg {
    Arg::Lin(Lin::k(c))
}
fn lab(f: Family, args: Vec<Arg>) -> Label {
    Label::new(f, args)
}
fn su(a: Lin) -> Label {
    lab(Family::Su, vec![l(a)])
}
fn so(a: Lin) -> Label {
    lab(Family::So, vec![l(a)])
}
fn sp(a: Lin) -> Label {
    lab(Family::Sp, vec![l(a)])
}
fn pq() -> Vec<Arg> {
    vec![l(P), l(QQ)]
}
fn sum(ls: Vec<Label>) -> Sum {
    Sum(ls)
}
fn quot(num: Label, den: Vec<Label>) -> Option<Quotient> {
    Some(Quotient { numerator: num, denominator: Sum(den) })
}
fn u(c: i64) -> Label {
    lab(Family::U, vec![k(c)])
}
fn s_u(a: i64, b: i64, sub: Subscript) -> Label {
    lab(Family::S, vec![Arg::Product(vec![u(a), u(b)])]).sub(sub).twist(1)
}

struct RowSpec {
    id: &'static str,
    table: Table,
    name: Label,
    aut: AutRecipe,
    painted: Vec<Lin>,
    fixed: Vec<Label>,
}

impl RowSpec {
    fn row(self) -> CatalogRow {
        CatalogRow {
            id: self.id,
            table: self.table,
            name: self.name,
            pq_sum: None,
            min_n: 1,
            exact_rank: None,
            automorphism: self.aut,
            painted: self.painted,
            p_range: None,
            fixed: Sum(self.fixed),
            compact_space: None,
            noncompact_space: None,
            dispute: None,
            root_entry: None,
        }
    }
}

fn row(id: &'static str, table: Table, name: Label, aut: AutRecipe, painted: Vec<Lin>, fixed: Vec<Label>) -> CatalogRow {
    RowSpec { id, table, name, aut, painted, fixed }.row()
}

impl CatalogRow {
    fn spaces(mut self, compact: Label, noncompact: Label) -> Self {
        self.compact_space = quot(compact, self.fixed.0.clone());
        self.noncompact_space = quot(noncompact, self.fixed.0.clone());
        self
    }
    fn spaces_with(mut self, compact: Option<Quotient>, noncompact: Option<Quotient>) -> Self {
        self.compact_space = compact;
        self.noncompact_space = noncompact;
        self
    }
    fn pq(mut self, s: Lin) -> Self {
        self.pq_sum = Some(s);
        self
    }
    fn min_n(mut self, m: i64) -> Self {
        self.min_n = m;
        self
    }
    fn p_range(mut self, lo: fn(i64) -> i64, hi: fn(i64) -> i64) -> Self {
        self.p_range = Some((lo, hi));
        self
    }
    fn exact(mut self, r: usize) -> Self {
        self.exact_rank = Some(r);
        self
    }
    fn root_entry(mut self, id: &'static str) -> Self {
        self.root_entry = Some(id);
        self
    }
}

fn worked_rows() -> Vec<CatalogRow> {
    use AutRecipe::*;
    use Subscript::*;
    let w = Table::Worked;
    let su2 = || lab(Family::Su, vec![k(2)]).twist(1);
    let su3 = || lab(Family::Su, vec![k(3)]).twist(1);
    let su_pq = |sub, a, b| lab(Family::Su, vec![k(a), k(b)]).sub(sub).twist(1);
    let su_sum = |a, b| lab(Family::Su, vec![Arg::Sum(vec![Lin::k(a), Lin::k(b)])]).twist(1);
    let so_t = |m, sub: Option<Subscript>| {
        let mut x = lab(Family::So, vec![k(m)]).twist(1);
        x.subscript = sub;
        x
    };
    let sl_r = |m, sub: Option<Subscript>| {
        let mut x = lab(Family::Sl, vec![k(m), Arg::Reals]).twist(1);
        x.subscript = sub;
        x
    };
    vec![
        row("A1.compact", w, su2(), Identity, vec![], vec![su2()]).exact(1),
        row("A1.I", w, su_pq(One, 1, 1), Identity, vec![Lin::k(0), Lin::k(1)], vec![s_u(1, 1, One)])
            .exact(1)
            .spaces(su_sum(1, 1), su_pq(One, 1, 1)),
        row("A1.II", w, su_pq(MinusOne, 1, 1), Identity, vec![Lin::k(1)], vec![s_u(1, 1, MinusOne)])
            .exact(1)
            .spaces(su_sum(1, 1), su_pq(MinusOne, 1, 1)),
        row("A1.III", w, sl_r(2, None), HalfTurn, vec![], vec![so_t(2, None)]).exact(1).spaces(su2(), sl_r(2, None)),
        row("A2.compact", w, su3(), Identity, vec![], vec![su3()]).exact(2),
        row("A2.I", w, su_pq(One, 2, 1), Identity, vec![Lin::k(0), Lin::k(1)], vec![s_u(2, 1, One)])
            .exact(2)
            .spaces(su_sum(2, 1), su_pq(One, 2, 1)),
        row("A2.II", w, su_pq(MinusOne, 2, 1), Identity, vec![Lin::k(1)], vec![s_u(2, 1, MinusOne)])
            .exact(2)
            .spaces(su_sum(2, 1), su_pq(MinusOne, 2, 1)),
        row("A2.III", w, sl_r(3, Some(One)), Reflection, vec![Lin::k(0)], vec![so_t(3, Some(One))])
            .exact(2)
            .spaces(su3(), sl_r(3, Some(One))),
        row("A2.IV", w, sl_r(3, Some(MinusOne)), Reflection, vec![], vec![so_t(3, Some(MinusOne))])
            .exact(2)
            .spaces(su3(), sl_r(3, Some(MinusOne))),
    ]
}

fn a_rows() -> Vec<CatalogRow> {
    use AutRecipe::*;
    use Subscript::*;
    let t = Table::I;
    let two_n = Lin::n(2, 0);
    let su_t = |a: Lin, tw: u8| su(a).twist(tw);
    let sl_h = |sub| lab(Family::Sl, vec![l(N), Arg::Quaternions]).sub(sub).twist(1);
    let sl_r = |a: Lin, sub| lab(Family::Sl, vec![l(a), Arg::Reals]).sub(sub).twist(1);
    let su_pq = |sub| lab(Family::Su, pq()).sub(sub).twist(1);
    let su_pq_sum = || lab(Family::Su, vec![l(Lin::new(0, 1, 1, 0))]).twist(1);
    let mut rows = vec![
        row("I.compact", t, su_t(two_n, 1), Identity, vec![], vec![su_t(two_n, 1)]),
        row("I.su-1(p,q)", t, su_pq(MinusOne), Identity, vec![Lin::k(0)], vec![su(two_n)])
            .pq(two_n)
            .spaces(su_pq_sum(), su_pq(MinusOne))
            .root_entry("su-1(p,q)"),
        row("I.su1(p,q)", t, su_pq(One), Identity, vec![Lin::k(0), P], vec![su(P), su(QQ)])
            .pq(two_n)
            .p_range(|_| 1, |n| n)
            .spaces(su_pq_sum(), su_pq(One))
            .root_entry("su1(p,q)"),
        row("I.sl_s(n,H)", t, sl_h(S), Reflection, vec![], vec![sp(two_n).twist(1)])
            .spaces(su_t(two_n, 1), sl_h(S))
            .root_entry("sl_s(n,H)"),
        row("I.sl-1(2n,R)", t, sl_r(two_n, MinusOne), Reflection, vec![Lin::k(0)], vec![su_t(two_n, 2)])
            .min_n(3)
            .spaces(su_t(two_n, 1), sl_r(two_n, MinusOne))
            .root_entry("sl-1(2n,R)"),
        row("I.sl1(2n,R)", t, sl_r(two_n, One), Reflection, vec![Lin::k(0), N], vec![so(two_n).twist(1)])
            .min_n(4)
            .spaces(su_t(two_n, 1), sl_r(two_n, One))
            .root_entry("sl1(2n,R)"),
        row("I.sl_r^n(n,H)", t, sl_h(RPow(N)), HalfTurn, vec![], vec![su_t(N, 1)])
            .spaces(su_t(two_n, 1), sl_h(RPow(N)))
            .root_entry("sl_r^n(n,H)"),
        row("I.sl_rs(n,H)", t, sl_h(RS), TurnReflection, vec![], vec![so(two_n).twist(2)])
            .spaces(su_t(two_n, 1), sl_h(RS))
            .root_entry("sl_rs(n,H)"),
    ];
    let t = Table::II;
    let m = Lin::n(2, 1);
    rows.extend([
        row("II.compact", t, su_t(m, 1), Identity, vec![], vec![su_t(m, 1)]),
        row("II.su-1(p,q)", t, su_pq(MinusOne), Identity, vec![Lin::k(0)], vec![su(m)])
            .pq(m)
            .spaces(su_pq_sum(), su_pq(MinusOne))
            .root_entry("su-1(p,q)"),
        row("II.su1(p,q)", t, su_pq(One), Identity, vec![Lin::k(0), P], vec![su(P), su(QQ)])
            .pq(m)
            .p_range(|_| 1, |n| n)
            .spaces(su_pq_sum(), su_pq(One))
            .root_entry("su1(p,q)"),
        row("II.sl-1(2n+1,R)", t, sl_r(m, MinusOne), Reflection, vec![], vec![su_t(m, 2)])
            .spaces(su_t(m, 1), sl_r(m, MinusOne))
            .root_entry("sl-1(2n+1,R)"),
        row("II.sl1(2n+1,R)", t, sl_r(m, One), Reflection, vec![Lin::k(0)], vec![so(two_n).twist(1)])
            .min_n(3)
            .spaces(su_t(m, 1), sl_r(m, One))
            .root_entry("sl1(2n+1,R)"),
    ]);
    rows
}

fn b_rows() -> Vec<CatalogRow> {
    use AutRecipe::*;
    use Subscript::*;
    let t = Table::III;
    let m = Lin::n(2, 1);
    let so1 = |a: Lin| so(a).twist(1);
    let so_pq = |a: Lin, b: Lin| lab(Family::So, vec![l(a), l(b)]).twist(1);
    let g = || so1(m);
    let so2 = |sub| lab(Family::So, vec![k(2), l(Lin::n(2, -1))]).sub(sub).twist(1);
    vec![
        row("III.compact", t, g(), Identity, vec![], vec![g()]),
        row("III.so-1(2,2n-1)", t, so2(MinusOne), Identity, vec![Lin::k(1)], vec![so(m)])
            .spaces(g(), so2(MinusOne))
            .root_entry("so-1(2,2n-1)"),
        row("III.so(4,2n-3)", t, so_pq(Lin::k(4), Lin::n(2, -3)), Identity, vec![Lin::k(2)], vec![so(Lin::k(4)), so(Lin::n(2, -3))])
            .spaces(g(), so_pq(Lin::k(4), Lin::n(2, -3)))
            .root_entry("so(2p,2q+1)"),
        row(
            "III.so(6,2n-5)",
            t,
            so_pq(Lin::k(6), Lin::n(2, -5)),
            Identity,
            vec![Lin::k(3)],
            vec![su(Lin::k(4)).twist(1), so(Lin::n(2, -5))],
        )
        .min_n(3)
        .spaces(g(), so_pq(Lin::k(6), Lin::n(2, -5)))
        .root_entry("so(2p,2q+1)"),
        row("III.so(2p,2q+1)", t, so_pq(Lin::p(2, 0), Lin::q(2, 1)), Identity, vec![P], vec![so1(Lin::p(2, 0)), so(Lin::q(2, 1))])
            .pq(N)
            .p_range(|_| 2, |n| n)
            .spaces(g(), so_pq(Lin::p(2, 0), Lin::q(2, 1)))
            .root_entry("so(2p,2q+1)"),
        row("III.so(2n,1)", t, so_pq(Lin::n(2, 0), Lin::k(1)), Identity, vec![N], vec![so1(Lin::n(2, 0))])
            .spaces(g(), so_pq(Lin::n(2, 0), Lin::k(1)))
            .root_entry("so(2p,2q+1)"),
        row("III.so1(2,2n-1)", t, so2(One), Identity, vec![Lin::k(0), Lin::k(1)], vec![so(Lin::n(2, -1))])
            .spaces(g(), so2(One))
            .root_entry("so1(2,2n-1)"),
        row("III.so(1,2n)", t, so_pq(Lin::k(1), Lin::n(2, 0)), SwapZeroOne, vec![], vec![so(Lin::n(2, 0)).twist(2)])
            .spaces(g(), so_pq(Lin::k(1), Lin::n(2, 0)))
            .root_entry("so(1,2n)"),
        row(
            "III.so(5,2n-4)",
            t,
            so_pq(Lin::k(5), Lin::n(2, -4)),
            SwapZeroOne,
            vec![Lin::k(2)],
            vec![su(Lin::k(3)), so(Lin::n(2, -3))],
        )
        .spaces_with(
            quot(g(), vec![su(Lin::k(3)), so(Lin::n(2, -3))]),
            quot(so_pq(Lin::k(3), Lin::n(2, -2)), vec![su(Lin::k(3)), so(Lin::n(2, -3))]),
        )
        .root_entry("so(2p+1,2q)"),
        row(
            "III.so(2p+1,2q)",
            t,
            so_pq(Lin::p(2, 1), Lin::q(2, 0)),
            SwapZeroOne,
            vec![P],
            vec![so(Lin::p(2, 0)).twist(2), so(Lin::q(2, 1))],
        )
        .pq(N)
        .p_range(|_| 2, |n| n)
        .spaces(g(), so_pq(Lin::p(2, 1), Lin::q(2, 0)))
        .root_entry("so(2p+1,2q)"),
        row("III.so(2n-3,4)", t, so_pq(Lin::n(2, -3), Lin::k(4)), SwapZeroOne, vec![N], vec![so(Lin::n(2, 0)).twist(2)])
            .spaces(g(), so_pq(Lin::n(2, -3), Lin::k(4)))
            .root_entry("so(2p+1,2q)"),
    ]
}

fn c_rows() -> Vec<CatalogRow> {
    use AutRecipe::*;
    use Subscript::*;
    let mut rows = Vec::new();
    for (t, m) in [(Table::IV, Lin::n(2, -1)), (Table::V, Lin::n(2, 0))] {
        let pre = if t == Table::IV { "IV" } else { "V" };
        let sp1 = |a: Lin| sp(a).twist(1);
        let g = || sp1(m);
        let sp_r = |sub: Option<Subscript>| {
            let mut x = lab(Family::Sp, vec![l(m), Arg::Reals]).twist(1);
            x.subscript = sub;
            x
        };
        let sp_pq = || lab(Family::Sp, pq()).twist(1);
        let ids: [&'static str; 6] = if t == Table::IV {
            ["IV.compact", "IV.sp(p,q)", "IV.sp-1(2n-1,R)", "IV.sp1(2n-1,R)", "IV.sp(2n-1,R)", ""]
        } else {
            ["V.compact", "V.sp(p,q)", "V.sp-1(2n,R)", "V.sp1(2n,R)", "V.sp(n,H)", "V.sp(2n,R)"]
        };
        let _ = pre;
        let compact_g = || lab(Family::Sp, vec![l(Lin::new(0, 1, 1, 0))]).twist(1);
        let mut pqrow = row(ids[1], t, sp_pq(), Identity, vec![P], vec![sp1(P), sp(QQ)])
            .pq(m)
            .spaces(compact_g(), sp_pq())
            .root_entry("sp(p,q)");
        pqrow = if t == Table::IV { pqrow.p_range(|_| 1, |n| 2 * n - 2) } else { pqrow.p_range(|_| 2, |n| 2 * n - 2) };
        rows.push(row(ids[0], t, g(), Identity, vec![], vec![g()]));
        rows.push(pqrow);
        rows.push(
            row(ids[2], t, sp_r(Some(MinusOne)), Identity, vec![m], vec![sp(m)])
                .spaces(g(), sp_r(Some(MinusOne)))
                .root_entry("sp-1(n,R)"),
        );
        rows.push(
            row(ids[3], t, sp_r(Some(One)), Identity, vec![Lin::k(0), m], vec![su(m)])
                .spaces(g(), sp_r(Some(One)))
                .root_entry("sp1(n,R)"),
        );
        if t == Table::IV {
            rows.push(
                row(ids[4], t, sp_r(None), Reversal, vec![], vec![su(m).twist(2)])
                    .spaces(g(), sp_r(None))
                    .root_entry("sp(2n-1,R)"),
            );
        } else {
            let sp_h = lab(Family::Sp, vec![l(N), Arg::Quaternions]).twist(1);
            rows.push(row(ids[4], t, sp_h.clone(), Reversal, vec![], vec![sp1(N)]).spaces(g(), sp_h).root_entry("sp(n,H)"));
            rows.push(
                row(ids[5], t, sp_r(None), Reversal, vec![N], vec![su(m).twist(2)])
                    .min_n(3)
                    .spaces(g(), sp_r(None))
                    .root_entry("sp(2n,R)"),
            );
        }
    }
    rows
}

fn d_rows() -> Vec<CatalogRow> {
    use AutRecipe::*;
    use Subscript::*;
    let mut rows = Vec::new();
    for t in [Table::VI, Table::VII] {
        let even = t == Table::VI;
        let two_n = Lin::n(2, 0);
        let g = || so(two_n).twist(1);
        let so_pq = |a: Lin, b: Lin, sub: Option<Subscript>| {
            let mut x = lab(Family::So, vec![l(a), l(b)]).twist(1);
            x.subscript = sub;
            x
        };
        let id = |e: &'static str, o: &'static str| if even { e } else { o };
        rows.push(row(id("VI.compact", "VII.compact"), t, g(), Identity, vec![], vec![g()]));
        rows.push(
            row(
                id("VI.so(2p,2q)", "VII.so(2p,2q)"),
                t,
                so_pq(Lin::p(2, 0), Lin::q(2, 0), None),
                Identity,
                vec![P],
                vec![so(Lin::p(2, 0)).twist(1), so(Lin::q(2, 0))],
            )
            .pq(N)
            .p_range(|_| 1, |n| n / 2)
            .spaces(lab(Family::So, vec![l(Lin::new(0, 2, 2, 0))]).twist(1), so_pq(Lin::p(2, 0), Lin::q(2, 0), None))
            .root_entry("so(2p,2q)"),
        );
        let star = lab(Family::SoStar, vec![l(two_n)]).twist(1);
        rows.push(
            row(id("VI.so*(2n)", "VII.so*(2n)"), t, star, Identity, vec![Lin::k(0), N], vec![su(N)])
                .spaces_with(quot(g(), vec![su(N)]), quot(lab(Family::SoStar, vec![l(N)]).twist(1), vec![su(N)]))
                .root_entry("so*(2n)"),
        );
        let sm = so_pq(Lin::k(2), Lin::n(2, -2), Some(MinusOne));
        rows.push(
            row(id("VI.so-1(2,2n-2)", "VII.so-1(2,2n-2)"), t, sm.clone(), Identity, vec![Lin::k(0), Lin::k(1)], vec![so(Lin::n(2, -2))])
                .spaces(g(), sm)
                .root_entry("so-1(2,2n-2)"),
        );
        let sv1 = so_pq(Lin::k(1), Lin::n(2, -1), Some(Subscript::SigmaV));
        rows.push(
            row(id("VI.so_σv(1,2n-1)", "VII.so_σv(1,2n-1)"), t, sv1.clone(), AutRecipe::SigmaV, vec![], vec![sp(Lin::n(2, -2)).twist(2)])
                .spaces(g(), sv1)
                .root_entry("so_σv(1,2n-1)"),
        );
        let svp = so_pq(Lin::p(2, 1), Lin::q(2, 1), Some(Subscript::SigmaV));
        let svp_fixed = vec![so(Lin::p(2, 0)).twist(2), so(Lin::q(2, 1))];
        let svp_noncompact = if even {
            so_pq(Lin::p(2, 0), Lin::q(2, 1), Some(Subscript::SigmaV))
        } else {
            so_pq(Lin::p(2, 0), Lin::q(2, 1), None)
        };
        rows.push(
            row(id("VI.so_σv(2p+1,2q+1)", "VII.so_σv(2p+1,2q+1)"), t, svp, AutRecipe::SigmaV, vec![P], svp_fixed.clone())
                .pq(Lin::n(1, -1))
                .p_range(|_| 2, |n| n / 2)
                .spaces_with(quot(g(), svp_fixed.clone()), quot(svp_noncompact, svp_fixed))
                .root_entry("so_σv(2p+1,2q+1)"),
        );
        let gm1 = so_pq(Lin::k(1), Lin::n(2, -1), Some(Gamma));
        rows.push(
            row(id("VI.so_γ(1,2n-1)", "VII.so_γ(1,2n-1)"), t, gm1.clone(), SwapTail, vec![], vec![so(Lin::n(2, -1)).twist(1)])
                .spaces(g(), gm1)
                .root_entry("so_γ(1,2n-1)"),
        );
        let gp = so_pq(Lin::p(2, 1), Lin::q(2, 1), Some(Gamma));
        let gp_fixed = vec![so(Lin::p(2, 1)).twist(1), so(Lin::q(2, 1))];
        let gp_noncompact = if even { gp.clone() } else { so_pq(Lin::p(2, 1), Lin::q(2, 1), None) };
        rows.push(
            row(id("VI.so_γ(2p+1,2q+1)", "VII.so_γ(2p+1,2q+1)"), t, gp, SwapTail, vec![P], gp_fixed.clone())
                .pq(Lin::n(1, -1))
                .p_range(|_| 1, |n| n - 2)
                .spaces_with(quot(g(), gp_fixed.clone()), quot(gp_noncompact, gp_fixed))
                .root_entry("so_γ(2p+1,2q+1)"),
        );
        let ss1 = so_pq(Lin::k(1), Lin::n(2, -1), Some(SigmaS));
        if even {
            rows.push(
                row("VI.so_σs(1,2n-1)", t, ss1.clone(), Reversal, vec![], vec![su(N).twist(2)])
                    .spaces(g(), ss1)
                    .root_entry("so_σs(1,2n-1),even"),
            );
            let ssn = so_pq(Lin::n(1, 1), Lin::n(1, -1), Some(SigmaS));
            rows.push(
                row("VI.so_σs(n+1,n-1)", t, ssn.clone(), Reversal, vec![P], vec![so(N).twist(1)])
                    .p_range(|n| n / 2, |n| n / 2)
                    .spaces(g(), ssn)
                    .root_entry("so_σs(1,2n-1),even,painted"),
            );
        } else {
            let fixed = vec![so(Lin::n(1, -1)).twist(2)];
            let mut r = row("VII.so_σs(1,2n-1)", t, ss1.clone(), Reversal, vec![], fixed.clone())
                .spaces_with(quot(ss1.clone(), fixed.clone()), quot(ss1, fixed))
                .root_entry("so_σs(1,2n-1),odd");
            r.dispute = Some(Dispute {
                alternative: sum(vec![so(N).twist(1)]),
                note: "fixed algebra read as so⁽²⁾(n−1) in the table and so⁽¹⁾(n) in the root catalog",
            });
            rows.push(r);
        }
    }
    rows
}

/// Every catalog row, worked cases first, then Tables I–VII in order.
pub fn rows() -> &'static [CatalogRow] {
    static ROWS: OnceLock<Vec<CatalogRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let mut r = worked_rows();
        r.extend(a_rows());
        r.extend(b_rows());
        r.extend(c_rows());
        r.extend(d_rows());
        r
    })
}

pub fn rows_of(table: Table) -> impl Iterator<Item = &'static CatalogRow> {
    rows().iter().filter(move |r| r.table == table)
}

// ---------------------------------------------------------------------------
// Fixed-algebra simple roots per real form.

/// Transcribed simple-root description of a fixed algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEntry {
    pub id: &'static str,
    pub fixed_algebra: &'static str,
    /// Whether the compact simple roots are part of the list.
    pub includes_compact: bool,
    pub extra: &'static [&'static str],
}

impl RootEntry {
    pub fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.includes_compact {
            out.push(if self.extra.is_empty() { "compact simple roots only".to_string() } else { "compact simple roots".to_string() });
        }
        out.extend(self.extra.iter().map(|s| s.to_string()));
        out
    }
}

const HALF_ORBIT_2N: &str = "½(e_i−e_{i+1}+e_{2n−i}−e_{2n+1−i}), 1≤i≤n−1";
const HALF_ORBIT_2N1: &str = "½(e_i−e_{i+1}+e_{2n+1−i}−e_{2n+2−i}), 1≤i≤n−1";
const SIGMA_S_PAIR: [&str; 2] = ["½(e_1−e_2+e_{n−1}−e_n)", "½(−e_1−e_2+e_{n−1}+e_n)"];
const SIGMA_S_ORBIT: &str = "½(e_i−e_{i+1}+e_{n−i}−e_{n+1−i}), 2≤i≤n−2";

/// The per-real-form simple-root catalog.
pub fn root_entries() -> &'static [RootEntry] {
    const fn e(id: &'static str, fixed: &'static str, compact: bool, extra: &'static [&'static str]) -> RootEntry {
        RootEntry { id, fixed_algebra: fixed, includes_compact: compact, extra }
    }
    static ENTRIES: [RootEntry; 30] = [
        e("sl_s(n,H)", "sp⁽¹⁾(n)", false, &["e_{2n}−e_1", "e_n−e_{n+1}", HALF_ORBIT_2N]),
        e("sl-1(2n,R)", "su⁽²⁾(2n)", false, &["½(e_{n−1}+e_n−e_{n+1}−e_{n+2})", HALF_ORBIT_2N]),
        e("sl-1(2n+1,R)", "su⁽²⁾(2n+1)", false, &["e_{2n+1}−e_1", "½(e_n−e_{n+2})", HALF_ORBIT_2N1]),
        e("sl1(2n,R)", "so⁽¹⁾(2n)", false, &["½(e_{n−1}+e_n−e_{n+1}−e_{n+2})", "½(e_{2n−1}+e_{2n}−e_1−e_2)", HALF_ORBIT_2N1]),
        e("sl1(2n+1,R)", "so⁽¹⁾(2n)", false, &["½(e_n−e_{n+2})", "½(e_{2n}+e_{2n+1}−e_1−e_2)", HALF_ORBIT_2N1]),
        e("sl_r^n(n,H)", "su⁽¹⁾(n)", false, &["½(e_n−e_{n+1}+e_{2n}−e_1)", "½(e_i−e_{i+1}+e_{n+i}−e_{n+1−i}), 1≤i≤n−1"]),
        e("sl_rs(n,H)", "so⁽²⁾(2n)", false, &["½(e_{2n}−e_2)", "½(e_n−e_{n+2})", "½(e_{i+1}−e_{i+2}+e_{2n−i}−e_{2n+1−i}), 1≤i≤n−2"]),
        e("su-1(p,q)", "su(2n)", true, &[]),
        e("su1(p,q)", "su(p)⊕su(q)", true, &[]),
        e("so-1(2,2n-1)", "so(2n+3)", true, &[]),
        e("so(2p,2q+1)", "so⁽¹⁾(2p)⊕so(2q); so(4)⊕so(2n−3) at p=2; su⁽¹⁾(4)⊕so(2n−5) at p=3; so⁽¹⁾(2n) at q=0", true, &["e_{p−1}+e_p for p≥3"]),
        e("so(1,2n)", "so⁽²⁾(2n)", true, &["−e_2"]),
        e("so1(2,2n-1)", "so(2n+1)", true, &[]),
        e("so(2p+1,2q)", "so⁽²⁾(2p)⊕so(2q+1); su(3)⊕so(2n−3) at p=2; so⁽²⁾(2n) at q=2", true, &["−e_2", "e_p"]),
        e("sp(p,q)", "sp⁽¹⁾(p)⊕sp(q); su⁽¹⁾(2)⊕sp(q) at p=1", true, &["2e_p"]),
        e("sp-1(n,R)", "sp(n)", true, &[]),
        e("sp1(n,R)", "su(n)", true, &[]),
        e("sp(2n-1,R)", "su⁽²⁾(2n)", false, &["e_{2n−1}−e_1", "½(e_i−e_{i+1}+e_{2n−1−i}−e_{2n−i}), 1≤i≤n−1"]),
        e("sp(n,H)", "su⁽²⁾(2n)", false, &["e_n−e_{n+1}", "e_{2n}−e_1", HALF_ORBIT_2N]),
        e("sp(2n,R)", "su⁽²⁾(2n)", false, &["½(e_{n−1}+e_n−e_{n+1}−e_{n+2})", HALF_ORBIT_2N]),
        e("so(2p,2q)", "so⁽¹⁾(2p)⊕so(2q); su⁽¹⁾(4)⊕so(2n−6) at p=3", true, &["e_{p−1}+e_p for p≥2"]),
        e("so*(2n)", "su(n)", true, &[]),
        e("so-1(2,2n-2)", "su(2n−2)", true, &[]),
        e("so_σv(1,2n-1)", "so⁽²⁾(2n−2)", false, &["−e_2", "e_{n−1}", "e_i−e_{i+1}, 2≤i≤n−2"]),
        e(
            "so_σv(2p+1,2q+1)",
            "so⁽²⁾(2p)⊕so⁽¹⁾(2q+1); su(3)⊕so(2n−5) at p=2",
            false,
            &["−e_2", "e_{n−1}", "e_p", "e_i−e_{i+1}, 2≤i≤p−1 and p+1≤i≤n−2"],
        ),
        e("so_γ(1,2n-1)", "so⁽¹⁾(2n−1)", false, &["e_1−e_2", "−(e_1+e_2)", "e_{n−1}", "e_i−e_{i+1}, 2≤i≤n−2"]),
        e(
            "so_γ(2p+1,2q+1)",
            "so⁽¹⁾(2p+1)⊕so(2q+1); so⁽²⁾(2n) at p=1; sp⁽¹⁾(2)⊕so(2q+1) at p=2",
            false,
            &[
                "p=1: e_p, −(e_1+e_2), e_{n−1}, e_i−e_{i+1} for p+1≤i≤n−2",
                "p≠1: e_1−e_2, −(e_1+e_2), e_{n−1}, e_p, e_i−e_{i+1} for 2≤i≤p−1 and p+1≤i≤n−2",
            ],
        ),
        e("so_σs(1,2n-1),even", "su⁽²⁾(n)", false, &[SIGMA_S_PAIR[0], SIGMA_S_PAIR[1], "e_{n/2}−e_{n/2+1}", SIGMA_S_ORBIT]),
        e(
            "so_σs(1,2n-1),even,painted",
            "so⁽¹⁾(n)",
            false,
            &[SIGMA_S_PAIR[0], SIGMA_S_PAIR[1], "½(e_{n/2−1}+e_{n/2}−e_{n/2+1}−e_{n/2+2})", SIGMA_S_ORBIT],
        ),
        e("so_σs(1,2n-1),odd", "so⁽¹⁾(n)", false, &[SIGMA_S_PAIR[0], SIGMA_S_PAIR[1], SIGMA_S_ORBIT]),
    ];
    &ENTRIES
}

pub fn root_entry(id: &str) -> Option<&'static RootEntry> {
    root_entries().iter().find(|e| e.id == id)
}

// ---------------------------------------------------------------------------
// Instantiation and classification.

/// A catalog row at a concrete rank and parameter choice.
#[derive(Clone, Debug)]
pub struct Instance {
    pub row: &'static CatalogRow,
    pub env: Env,
    pub diagram: VoganDiagram,
    pub reduced: VoganDiagram,
}

impl Instance {
    pub fn in_range(&self) -> bool {
        self.env.n.is_none_or(|n| n >= self.row.min_n)
    }

    pub fn to_match(&self) -> Match {
        let r = self.row;
        let env = &self.env;
        Match {
            row: r.id.to_string(),
            table: r.table,
            params: self.env,
            name: r.name.render(env, false),
            fixed_algebra: r.fixed.render(env, false),
            compact_space: r.compact_space.as_ref().map(|q| q.render(env)),
            noncompact_space: r.noncompact_space.as_ref().map(|q| q.render(env)),
            constraint: r.render_constraint(env),
            in_range: self.in_range(),
            disputed: r.dispute.as_ref().map(|d| format!("{}; alternative reading {}", d.note, d.alternative.render(env, false))),
            root_description: r.root_entry.and_then(root_entry).map(RootEntry::describe),
            degree0: implied_degree0(&r.fixed, env),
        }
    }
}

/// A classification result for one catalog row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Match {
    pub row: String,
    pub table: Table,
    pub params: Env,
    pub name: String,
    pub fixed_algebra: String,
    pub compact_space: Option<String>,
    pub noncompact_space: Option<String>,
    pub constraint: Option<String>,
    /// Whether the table's rank condition holds at this rank.
    pub in_range: bool,
    pub disputed: Option<String>,
    pub root_description: Option<Vec<String>>,
    /// Degree-zero type implied by the fixed algebra, when all sizes are known.
    pub degree0: Option<Degree0Type>,
}

fn instantiate_row(row: &'static CatalogRow, series: Series, rank: usize) -> Vec<Instance> {
    if row.table.series() != series {
        return Vec::new();
    }
    let n = match row.exact_rank {
        Some(r) if r == rank => None,
        Some(_) => return Vec::new(),
        None => match row.table.param_for_rank(rank) {
            Some(n) => Some(n),
            None => return Vec::new(),
        },
    };
    let Ok(diagram) = build_affine_diagram(series, rank) else { return Vec::new() };
    let Some(map) = row.automorphism.map(series, rank) else { return Vec::new() };
    let Ok(aut) = automorphism_from_map(&diagram, map) else { return Vec::new() };
    let ps: Vec<Option<i64>> = match (row.p_range, n) {
        (Some((lo, hi)), Some(n)) => (lo(n)..=hi(n)).map(Some).collect(),
        _ => vec![None],
    };
    let mut out = Vec::new();
    for p in ps {
        let mut env = Env { n, p, q: None };
        if let (Some(s), Some(p)) = (row.pq_sum, p) {
            env.q = s.value(&env).map(|s| s - p);
        }
        let nodes: Option<Vec<usize>> = row
            .painted
            .iter()
            .map(|x| x.value(&env).and_then(|v| usize::try_from(v).ok()))
            .collect();
        let Some(nodes) = nodes else { continue };
        let Ok(vd) = make_vogan(&diagram, nodes, &aut) else { continue };
        let Ok(reduced) = reduce_borel_siebenthal(&vd) else { continue };
        out.push(Instance { row, env, diagram: vd, reduced });
    }
    out
}

/// All catalog instances on the diagram of `series` at `rank`, cached.
pub fn instances(series: Series, rank: usize) -> Arc<Vec<Instance>> {
    static CACHE: OnceLock<Mutex<BTreeMap<(Series, usize), Arc<Vec<Instance>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("catalog cache").get(&(series, rank)) {
        return v.clone();
    }
    let v: Arc<Vec<Instance>> = Arc::new(rows().iter().flat_map(|r| instantiate_row(r, series, rank)).collect());
    cache.lock().expect("catalog cache").insert((series, rank), v.clone());
    v
}

/// Result of classifying a Vogan diagram.
#[derive(Clone, Debug)]
pub struct Classification {
    pub reduced: VoganDiagram,
    pub matches: Vec<Match>,
}

impl Classification {
    /// First in-range match, falling back to the first match.
    pub fn primary(&self) -> Option<&Match> {
        self.matches.iter().find(|m| m.in_range).or_else(|| self.matches.first())
    }

    pub fn is_classified(&self) -> bool {
        !self.matches.is_empty()
    }
}

/// Reduce `vd` and look up every catalog row with the same canonical form.
pub fn classify(vd: &VoganDiagram) -> Result<Classification, VoganError> {
    let reduced = reduce_borel_siebenthal(vd)?;
    let insts = instances(vd.diagram.series, vd.diagram.rank);
    let matches = insts
        .iter()
        .filter(|i| i.reduced.painted == reduced.painted && i.reduced.automorphism.map == reduced.automorphism.map)
        .map(Instance::to_match)
        .collect();
    Ok(Classification { reduced, matches })
}

/// Every catalog instance on the given diagram, one per row and parameter.
pub fn list_forms(series: Series, rank: usize) -> Vec<(Match, VoganDiagram)> {
    instances(series, rank).iter().map(|i| (i.to_match(), i.reduced.clone())).collect()
}

/// Diagram of `row` at table parameter `n`, taking the smallest valid `p`.
pub fn row_fixture(row: &'static CatalogRow, n: i64) -> Option<VoganDiagram> {
    let rank = match row.exact_rank {
        Some(r) => r,
        None => row.table.rank_at(n)?,
    };
    instantiate_row(row, row.table.series(), rank).into_iter().next().map(|i| i.diagram)
}

// ---------------------------------------------------------------------------
// Table emission.

/// One emitted table row; every field is a rendered string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub table: String,
    pub row: String,
    pub real_form: String,
    pub constraint: String,
    pub vogan: String,
    pub fixed_algebra: String,
    pub compact_space: String,
    pub noncompact_space: String,
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
}

impl FromStr for TableFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            other => Err(format!("unknown table format {other:?}; use md or csv")),
        }
    }
}

/// Rows of `table` rendered at parameter `n`, with `p`, `q` left symbolic.
pub fn table_rows(table: Table, n: i64) -> Vec<TableRow> {
    let env = Env::with_n(n);
    rows_of(table)
        .map(|r| {
            let env = if r.exact_rank.is_some() { Env::default() } else { env };
            let mut notes = Vec::new();
            if let Some(d) = &r.dispute {
                notes.push(format!("disputed: {}; alternative reading {}", d.note, d.alternative.render(&env, false)));
            }
            if r.exact_rank.is_none() && n < r.min_n {
                notes.push(format!("outside rank condition at n={n}"));
            }
            TableRow {
                table: table.to_string(),
                row: r.id.to_string(),
                real_form: r.name.render(&env, false),
                constraint: r.render_constraint(&env).unwrap_or_default(),
                vogan: r.render_vogan(&env),
                fixed_algebra: r.fixed.render(&env, false),
                compact_space: r.compact_space.as_ref().map(|q| q.render(&env)).unwrap_or_default(),
                noncompact_space: r.noncompact_space.as_ref().map(|q| q.render(&env)).unwrap_or_default(),
                note: notes.join("; "),
            }
        })
        .collect()
}

const HEADERS: [&str; 9] =
    ["Table", "Row", "Real form", "Constraint", "Vogan diagram", "Fixed algebra", "Compact space", "Non-compact space", "Note"];

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Emit the given tables at parameter `n`.
pub fn emit_table(tables: &[Table], n: i64, format: TableFormat) -> Result<String, csv::Error> {
    let rows: Vec<TableRow> = tables.iter().flat_map(|&t| table_rows(t, n)).collect();
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r)?;
            }
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
        }
        TableFormat::Markdown => {
            let mut out = String::new();
            for &t in tables {
                let rank = t.rank_at(n).map(|r| format!(" (rank {r})")).unwrap_or_default();
                out.push_str(&format!("### Table {t}: {} at n={n}{rank}\n\n", t.caption()));
                out.push_str(&format!("| {} |\n", HEADERS.join(" | ")));
                out.push_str(&format!("|{}\n", "---|".repeat(HEADERS.len())));
                for r in rows.iter().filter(|r| r.table == t.to_string()) {
                    let cells = [
                        &r.table,
                        &r.row,
                        &r.real_form,
                        &r.constraint,
                        &r.vogan,
                        &r.fixed_algebra,
                        &r.compact_space,
                        &r.noncompact_space,
                        &r.note,
                    ];
                    out.push_str(&format!("| {} |\n", cells.map(|c| md_escape(c)).join(" | ")));
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// Parse CSV produced by [`emit_table`].
pub fn parse_table_csv(text: &str) -> Result<Vec<TableRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vogan::make_trivial;

    fn classify_first(vd: &VoganDiagram) -> Match {
        classify(vd).unwrap().primary().cloned().expect("classified")
    }

    #[test]
    fn table_one_examples() {
        let d = build_affine_diagram(Series::A, 3).unwrap();
        let m = classify_first(&make_trivial(&d, [0]).unwrap());
        assert_eq!(m.name, "su₋₁⁽¹⁾(p,q)");
        assert_eq!(m.fixed_algebra, "su(4)");
        assert_eq!(m.compact_space.as_deref(), Some("SU⁽¹⁾(p+q)/SU(4)"));
        assert_eq!(m.noncompact_space.as_deref(), Some("SU₋₁⁽¹⁾(p,q)/SU(4)"));
        assert_eq!(m.constraint.as_deref(), Some("p+q=4"));
        let m = classify_first(&make_trivial(&d, []).unwrap());
        assert_eq!(m.name, "su⁽¹⁾(4)");
        assert!(m.compact_space.is_none());
    }

    #[test]
    fn symplectic_signature_rows() {
        let d = build_affine_diagram(Series::C, 5).unwrap();
        let m = classify_first(&make_trivial(&d, [2]).unwrap());
        assert_eq!(m.name, "sp⁽¹⁾(2,3)");
        assert_eq!(m.fixed_algebra, "sp⁽¹⁾(2)⊕sp(3)");
    }

    #[test]
    fn worked_rank_one() {
        let d = build_affine_diagram(Series::A, 1).unwrap();
        let m = classify_first(&make_trivial(&d, [0, 1]).unwrap());
        assert_eq!(m.name, "su₁⁽¹⁾(1,1)");
        assert_eq!(m.noncompact_space.as_deref(), Some("SU₁⁽¹⁾(1,1)/S₁⁽¹⁾(U₁×U₁)"));
        assert_eq!(m.compact_space.as_deref(), Some("SU⁽¹⁾(1+1)/S₁⁽¹⁾(U₁×U₁)"));
        assert_eq!(m.degree0.unwrap().to_string(), "center(1)");
    }

    #[test]
    fn unclassified_reports_reduced_form() {
        // C₆ with node 1 painted: Table V starts its signature row at p = 2.
        let d = build_affine_diagram(Series::C, 6).unwrap();
        let c = classify(&make_trivial(&d, [1]).unwrap()).unwrap();
        assert!(!c.is_classified());
        assert!(c.reduced.painted.len() <= 2);
    }

    #[test]
    fn table_parameters() {
        assert_eq!(Table::I.rank_at(3), Some(5));
        assert_eq!(Table::VII.rank_at(6), None);
        assert_eq!(Table::IV.param_for_rank(5), Some(3));
        assert_eq!(Table::V.param_for_rank(5), None);
        assert_eq!(select_tables("D", 5).unwrap(), vec![Table::VII]);
        assert!(select_tables("E", 5).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let text = emit_table(&[Table::III], 3, TableFormat::Csv).unwrap();
        let rows = parse_table_csv(&text).unwrap();
        assert_eq!(rows, table_rows(Table::III, 3));
    }

    #[test]
    fn root_catalog_is_complete() {
        assert_eq!(root_entries().len(), 30);
        for r in rows() {
            if let Some(id) = r.root_entry {
                assert!(root_entry(id).is_some(), "{id}");
            }
        }
        let e = root_entry("sl_s(n,H)").unwrap();
        assert!(e.extra.contains(&"e_{2n}−e_1") && e.extra.contains(&"e_n−e_{n+1}"));
        assert_eq!(root_entry("su1(p,q)").unwrap().describe(), vec!["compact simple roots only"]);
    }
}
