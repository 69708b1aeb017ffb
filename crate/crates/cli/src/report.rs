//! Serializable command results and their text rendering.

use std::fmt::Write as _;

use bihom_core::{AuditReport, GaussianRational, Rational, SignatureReport};
use serde::Serialize;

/// `p/q`, with the denominator always present.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Serialize, Clone, Debug)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub rank: usize,
}

impl From<SignatureReport> for Signature {
    fn from(s: SignatureReport) -> Self {
        Self {
            positive: s.positive,
            negative: s.negative,
            rank: s.rank,
        }
    }
}

impl Signature {
    fn text(&self) -> String {
        format!("P={} N={} R={}", self.positive, self.negative, self.rank)
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Complex {
    pub re: String,
    pub im: String,
}

impl From<&GaussianRational> for Complex {
    fn from(c: &GaussianRational) -> Self {
        Self {
            re: rational_string(&c.re),
            im: rational_string(&c.im),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct SigOutput {
    pub n: usize,
    pub m: usize,
    pub signature: Signature,
    pub verified: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct WeightedTerm {
    pub weight: String,
    pub form: String,
    #[serde(skip)]
    pub weight_text: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct DecomposeOutput {
    pub n: usize,
    pub m: usize,
    pub signature: Signature,
    pub verified: bool,
    pub terms: Vec<WeightedTerm>,
}

#[derive(Serialize, Clone, Debug)]
pub struct MulNormOutput {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub product_m: usize,
    pub signature: Signature,
    pub verified: bool,
    pub basis: Vec<String>,
    pub matrix: Vec<Vec<Complex>>,
    pub expression: String,
    #[serde(skip)]
    pub matrix_text: Vec<Vec<String>>,
}

#[derive(Serialize, Clone, Debug)]
pub struct MinDOutput {
    pub n: usize,
    pub m: usize,
    pub max: usize,
    pub minimal_d: Option<usize>,
    pub verified: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct HilbertOutput {
    pub n: usize,
    pub degree: usize,
    pub generators: Vec<String>,
    pub dimension: u64,
    pub hilbert_ideal: u64,
    pub hilbert_quotient: u64,
    #[serde(skip)]
    pub quotient: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct InitOutput {
    pub n: usize,
    pub degree: usize,
    pub generators: Vec<String>,
    pub monomials: Vec<String>,
    pub exponents: Vec<Vec<u32>>,
    pub lex_segment: Option<bool>,
}

#[derive(Serialize, Clone, Debug)]
pub struct MacaulayTermOut {
    pub top: u64,
    pub bottom: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct IterateOut {
    pub d: usize,
    pub stepwise: u64,
    pub closed_form: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct MacaulayOutput {
    pub c: u64,
    pub m: usize,
    pub representation: String,
    pub terms: Vec<MacaulayTermOut>,
    pub shift: u64,
    pub iterate: Option<IterateOut>,
}

#[derive(Serialize, Clone, Debug)]
pub struct GrowthStep {
    pub degree: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub equality: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct GotzmannOut {
    pub s: usize,
    pub window: usize,
    pub triggered: bool,
    pub persists: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct GrowthOutput {
    pub n: usize,
    pub from: usize,
    pub window: usize,
    pub generators: Vec<String>,
    pub steps: Vec<GrowthStep>,
    pub gotzmann: Option<GotzmannOut>,
    pub gotzmann_skipped: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Interval {
    pub p: u64,
    pub low: u64,
    pub high: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct RankQuery {
    pub rho: u64,
    pub admissible: bool,
    pub witness: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct RanksOutput {
    pub n: usize,
    pub intervals: Vec<Interval>,
    pub tail: u64,
    pub excluded: Vec<u64>,
    pub query: Option<RankQuery>,
}

#[derive(Serialize, Clone, Debug)]
pub struct AuditOutput {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub signature: Signature,
    pub product_signature: Signature,
    pub product_is_squared_norm: bool,
    pub hilbert_fg_at_m_plus_d: u64,
    pub theorem_bound: String,
    pub theorem_ok: bool,
    pub hilbert_upper_ok: bool,
    pub corollary1_ok: bool,
    pub corollary2_bound: Option<String>,
    pub corollary2_ok: Option<bool>,
    pub rank_admissible: Option<bool>,
    pub prop42_ok: Option<bool>,
    pub lemma_containment_ok: Option<bool>,
    pub violations: Vec<String>,
    pub verified: bool,
}

impl AuditOutput {
    pub fn new(r: &AuditReport, verified: bool) -> Self {
        Self {
            n: r.n,
            m: r.m,
            d: r.d,
            signature: r.signature.into(),
            product_signature: r.product_signature.into(),
            product_is_squared_norm: r.product_is_squared_norm,
            hilbert_fg_at_m_plus_d: r.hilbert_fg_at_m_plus_d,
            theorem_bound: rational_string(&r.theorem_bound),
            theorem_ok: r.theorem_ok,
            hilbert_upper_ok: r.hilbert_upper_ok,
            corollary1_ok: r.corollary1_ok,
            corollary2_bound: r.corollary2_bound.as_ref().map(rational_string),
            corollary2_ok: r.corollary2_ok,
            rank_admissible: r.rank_admissible,
            prop42_ok: r.prop42_ok,
            lemma_containment_ok: r.lemma_containment_ok,
            violations: r.violations().into_iter().map(String::from).collect(),
            verified,
        }
    }
}

/// A command result tagged by subcommand name.
#[derive(Serialize, Clone, Debug)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Output {
    Sig(SigOutput),
    Decompose(DecomposeOutput),
    MulNorm(MulNormOutput),
    MinD(MinDOutput),
    Hilbert(HilbertOutput),
    Init(InitOutput),
    MacaulayRep(MacaulayOutput),
    Growth(GrowthOutput),
    Ranks(RanksOutput),
    Audit(AuditOutput),
}

fn opt(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

impl Output {
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("output serializes");
        s.push('\n');
        s
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Sig(o) => {
                writeln!(s, "{}", o.signature.text()).unwrap();
            }
            Output::Decompose(o) => {
                writeln!(s, "{}", o.signature.text()).unwrap();
                for t in &o.terms {
                    writeln!(s, "{}*abs2({})", t.weight_text, t.form).unwrap();
                }
            }
            Output::MulNorm(o) => {
                writeln!(
                    s,
                    "bidegree ({0},{0}), {1}",
                    o.product_m,
                    o.signature.text()
                )
                .unwrap();
                writeln!(s, "basis: {}", o.basis.join(" ")).unwrap();
                for row in &o.matrix_text {
                    writeln!(s, "{}", row.join(" ")).unwrap();
                }
                writeln!(s, "expression: {}", o.expression).unwrap();
            }
            Output::MinD(o) => match o.minimal_d {
                Some(d) => writeln!(s, "{d}").unwrap(),
                None => writeln!(s, "none (searched d <= {})", o.max).unwrap(),
            },
            Output::Hilbert(o) => {
                if o.quotient {
                    writeln!(s, "H_S/I({}) = {}", o.degree, o.hilbert_quotient).unwrap();
                } else {
                    writeln!(s, "H_I({}) = {}", o.degree, o.hilbert_ideal).unwrap();
                }
            }
            Output::Init(o) => {
                writeln!(s, "init(I)_{}: {}", o.degree, o.monomials.join(", ")).unwrap();
                if let Some(b) = o.lex_segment {
                    writeln!(s, "lex segment: {b}").unwrap();
                }
            }
            Output::MacaulayRep(o) => {
                write!(s, "{} = {}; shift: {}", o.c, o.representation, o.shift).unwrap();
                if let Some(it) = &o.iterate {
                    write!(s, "; iterated({}): {}", it.d, it.stepwise).unwrap();
                }
                s.push('\n');
            }
            Output::Growth(o) => {
                for st in &o.steps {
                    writeln!(
                        s,
                        "k={0}: H(k+1)={1} <= H(k)^<k>={2} {3}",
                        st.degree,
                        st.lhs,
                        st.rhs,
                        match (st.holds, st.equality) {
                            (true, true) => "equality",
                            (true, false) => "holds",
                            (false, _) => "VIOLATED",
                        }
                    )
                    .unwrap();
                }
                match (&o.gotzmann, &o.gotzmann_skipped) {
                    (Some(g), _) => writeln!(
                        s,
                        "gotzmann s={}: triggered={} persists={}",
                        g.s, g.triggered, g.persists
                    )
                    .unwrap(),
                    (None, Some(why)) => writeln!(s, "gotzmann: skipped ({why})").unwrap(),
                    (None, None) => {}
                }
            }
            Output::Ranks(o) => {
                for iv in &o.intervals {
                    writeln!(s, "P={}: [{},{}]", iv.p, iv.low, iv.high).unwrap();
                }
                writeln!(s, "tail: rho >= {}", o.tail).unwrap();
                let ex: Vec<String> = o.excluded.iter().map(u64::to_string).collect();
                writeln!(
                    s,
                    "excluded: {}",
                    if ex.is_empty() {
                        "none".into()
                    } else {
                        ex.join(", ")
                    }
                )
                .unwrap();
                if let Some(q) = &o.query {
                    if q.admissible {
                        writeln!(s, "rho={}: admissible ({})", q.rho, q.witness).unwrap();
                    } else {
                        writeln!(s, "rho={}: inadmissible", q.rho).unwrap();
                    }
                }
            }
            Output::Audit(o) => {
                let lines = [
                    ("n", o.n.to_string()),
                    ("m", o.m.to_string()),
                    ("d", o.d.to_string()),
                    ("signature", o.signature.text()),
                    ("product signature", o.product_signature.text()),
                    (
                        "product is squared norm",
                        o.product_is_squared_norm.to_string(),
                    ),
                    ("H_fg(m+d)", o.hilbert_fg_at_m_plus_d.to_string()),
                    ("theorem bound", o.theorem_bound.clone()),
                    ("theorem", o.theorem_ok.to_string()),
                    ("hilbert upper bound", o.hilbert_upper_ok.to_string()),
                    ("corollary 1", o.corollary1_ok.to_string()),
                    (
                        "corollary 2 bound",
                        o.corollary2_bound.clone().unwrap_or_else(|| "n/a".into()),
                    ),
                    ("corollary 2", opt(o.corollary2_ok).into()),
                    ("rank admissible", opt(o.rank_admissible).into()),
                    ("prop42", opt(o.prop42_ok).into()),
                    ("lemma containment", opt(o.lemma_containment_ok).into()),
                    (
                        "violations",
                        if o.violations.is_empty() {
                            "none".into()
                        } else {
                            o.violations.join(", ")
                        },
                    ),
                ];
                for (k, v) in lines {
                    writeln!(s, "{k}: {v}").unwrap();
                }
            }
        }
        s
    }
}
