#![allow(dead_code)]

use rand::Rng;

/// `(|z1|^2 - |z2|^2)^2 + eps |z1 z2|^2` in the expression syntax.
pub fn epsilon_expr(eps: &str) -> String {
    format!("(z1*w1 - z2*w2)^2 + {eps}*z1*z2*w1*w2")
}

pub const LITERAL_EXAMPLE: &str = "abs2(z1^2-z2^2)+1/2*abs2(z1*z2)";

/// Invocations covering every subcommand, without the program name.
pub fn worked_examples() -> Vec<Vec<String>> {
    let r = epsilon_expr("1/2");
    let cases: Vec<Vec<&str>> = vec![
        vec!["sig", "--n", "2", "--expr", LITERAL_EXAMPLE],
        vec!["sig", "--n", "2", "--expr", &r],
        vec![
            "sig",
            "--n",
            "2",
            "--expr",
            "abs2(z1) - abs2(z2)",
            "--verify",
        ],
        vec!["decompose", "--n", "2", "--expr", &r],
        vec!["decompose", "--n", "2", "--expr", "abs2(z1 + z2)"],
        vec![
            "mul-norm",
            "--n",
            "2",
            "--expr",
            "(z1*w1 - z2*w2)^2",
            "--d",
            "1",
        ],
        vec!["mul-norm", "--n", "2", "--expr", "abs2(z1)", "--d", "1"],
        vec![
            "min-d",
            "--n",
            "2",
            "--expr",
            LITERAL_EXAMPLE,
            "--max",
            "10",
        ],
        vec!["min-d", "--n", "2", "--expr", &r, "--max", "10"],
        vec![
            "min-d",
            "--n",
            "2",
            "--expr",
            "abs2(z1) - abs2(z2)",
            "--max",
            "8",
        ],
        vec![
            "hilbert",
            "--n",
            "2",
            "--gens",
            "z1^2; z1*z2",
            "--degree",
            "3",
        ],
        vec![
            "hilbert",
            "--n",
            "2",
            "--gens",
            "z1^2; z1*z2",
            "--degree",
            "3",
            "--quotient",
        ],
        vec![
            "hilbert",
            "--n",
            "2",
            "--gens",
            "z1^2 + z2^2; z1*z2",
            "--degree",
            "3",
        ],
        vec![
            "init",
            "--n",
            "2",
            "--gens",
            "z1^2 + z2^2; z1*z2",
            "--degree",
            "2",
            "--lex-segment-check",
        ],
        vec![
            "init",
            "--n",
            "2",
            "--gens",
            "z2^2",
            "--degree",
            "2",
            "--lex-segment-check",
        ],
        vec!["macaulay-rep", "6", "3"],
        vec!["macaulay-rep", "3", "2", "--iterate", "2"],
        vec!["macaulay-rep", "0", "4"],
        vec![
            "growth", "--n", "2", "--gens", "z1^2", "--from", "2", "--window", "5",
        ],
        vec![
            "growth",
            "--n",
            "2",
            "--gens",
            "z1^2; z1*z2",
            "--from",
            "2",
            "--window",
            "5",
        ],
        vec![
            "growth",
            "--n",
            "3",
            "--gens",
            "z1^2; z1*z2",
            "--from",
            "2",
            "--window",
            "5",
        ],
        vec!["ranks", "--n", "3"],
        vec!["ranks", "--n", "3", "--rho", "4"],
        vec!["ranks", "--n", "3", "--rho", "5"],
        vec!["audit", "--n", "2", "--expr", &r, "--d", "5"],
        vec!["audit", "--n", "2", "--expr", &r, "--d", "4"],
        vec![
            "audit",
            "--n",
            "2",
            "--expr",
            "abs2(z1^2) + abs2(z2^2)",
            "--d",
            "1",
            "--verify",
        ],
    ];
    cases
        .into_iter()
        .map(|c| c.into_iter().map(String::from).collect())
        .collect()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_cli<S: AsRef<str>>(args: &[S]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bihom").chain(args.iter().map(|a| a.as_ref()));
    let code = bihom_cli::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn coefficient<R: Rng>(rng: &mut R) -> String {
    let p = rng.gen_range(1..=5);
    let q = rng.gen_range(1..=3);
    let re = if q == 1 {
        p.to_string()
    } else {
        format!("{p}/{q}")
    };
    match rng.gen_range(0..4) {
        0 => re,
        1 => format!("{re}*i"),
        2 => format!("({re} - {}*i)", rng.gen_range(1..=4)),
        _ => format!("({re} + {}*i)", rng.gen_range(1..=4)),
    }
}

fn monomial<R: Rng>(rng: &mut R, n: usize, deg: usize, var: char) -> String {
    let mut exps = vec![0u32; n];
    for _ in 0..deg {
        exps[rng.gen_range(0..n)] += 1;
    }
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| {
            if e == 1 {
                format!("{var}{}", k + 1)
            } else {
                format!("{var}{}^{e}", k + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn holomorphic<R: Rng>(rng: &mut R, n: usize, deg: usize) -> String {
    if deg > 0 && rng.gen_bool(0.3) {
        // product of linear factors
        let factors: Vec<String> = (0..deg)
            .map(|_| {
                format!(
                    "({}*{} + {})",
                    coefficient(rng),
                    monomial(rng, n, 1, 'z'),
                    monomial(rng, n, 1, 'z')
                )
            })
            .collect();
        return factors.join("*");
    }
    let count = rng.gen_range(1..=3);
    let terms: Vec<String> = (0..count)
        .map(|_| format!("{}*{}", coefficient(rng), monomial(rng, n, deg, 'z')))
        .collect();
    terms.join(if rng.gen_bool(0.5) { " + " } else { " - " })
}

fn conjugate_coefficient(c: &str) -> String {
    if let Some(re) = c.strip_suffix("*i") {
        if !c.starts_with('(') {
            return format!("-{re}*i");
        }
    }
    if c.starts_with('(') {
        return if c.contains(" - ") {
            c.replacen(" - ", " + ", 1)
        } else {
            c.replacen(" + ", " - ", 1)
        };
    }
    c.to_string()
}

/// A random real bihomogeneous expression over `n` variables with bidegree `(m, m)`.
pub fn random_expression<R: Rng>(rng: &mut R, n: usize, m: usize) -> String {
    let count = rng.gen_range(1..=4);
    let mut text = String::new();
    for idx in 0..count {
        let piece = match rng.gen_range(0..3) {
            0 => format!("{}*abs2({})", rng.gen_range(1..=4), holomorphic(rng, n, m)),
            1 => {
                let c = coefficient(rng);
                let a = monomial(rng, n, m, 'z');
                let b = monomial(rng, n, m, 'w');
                let a_bar = a.replace('z', "w");
                let b_bar = b.replace('w', "z");
                let cc = conjugate_coefficient(&c);
                format!("({c}*{a}*{b} + {cc}*{b_bar}*{a_bar})")
            }
            _ => {
                let a = monomial(rng, n, m, 'z');
                format!(
                    "{}/{}*{}*{}",
                    rng.gen_range(1..=7),
                    rng.gen_range(1..=3),
                    a,
                    a.replace('z', "w")
                )
            }
        };
        if idx > 0 {
            text.push_str(if rng.gen_bool(0.5) { " + " } else { " - " });
        }
        text.push_str(&piece);
    }
    text
}
