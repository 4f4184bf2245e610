//! Verification suites and their reports. Each check records what is expected,
//! what was computed and whether they agree; the JSON and Markdown renderings
//! depend only on the suite, the seed and the sample count.

use std::fmt::Display;
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebras::{e6, e6_eps, e6_h, e7_eps, e7_h, e8, e8_eps, e8_h, f4, f4_eps, f4_full, f4_h};
use crate::cache;
use crate::jordan::Kind;
use crate::killing::{self, b4, b8, nu_generator, Proportionality};
use crate::lie::{real_form, Ambient, E8Elem, LieAlgebra, Subalgebra};
use crate::linalg::{small_rational, SVec};
use crate::properties::{self, Sweep};
use crate::roots::{explicit_companions, format_form, root_system, so8_cartan, Level, RootSystem};
use crate::scalar::{Complex, Rational};
use crate::cayley::triality_companions;
use crate::wspace::{self, Normalization};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// One section per suite, in check order.
    pub fn to_markdown(&self) -> String {
        let cell = |s: &str| s.replace('|', "\\|").replace('\n', " ");
        let mut out = format!("# Suite `{}` (seed {})\n", self.suite, self.seed);
        let mut section = "";
        for c in &self.checks {
            let name = c.id.split('.').next().unwrap_or("");
            if name != section {
                section = name;
                out += &format!("\n## {name}\n\n| id | anchor | expected | actual | pass |\n|---|---|---|---|---|\n");
            }
            let mark = if c.pass { "yes" } else { "NO" };
            out += &format!("| {} | {} | {} | {} | {mark} |\n", cell(&c.id), cell(&c.anchor), cell(&c.expected), cell(&c.actual));
        }
        out += &format!("\n{} checks, {} passed, {} failed.\n", self.summary.total, self.summary.passed, self.summary.failed);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dims,
    Killing,
    Triality,
    Roots(Level),
    WSpace,
    RealForms,
    All,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Dims,
        Suite::Killing,
        Suite::Triality,
        Suite::Roots(Level::F4),
        Suite::Roots(Level::E6),
        Suite::Roots(Level::E7),
        Suite::Roots(Level::E8),
        Suite::WSpace,
        Suite::RealForms,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dims => "dims",
            Suite::Killing => "killing",
            Suite::Triality => "triality",
            Suite::Roots(Level::F4) => "roots-f4",
            Suite::Roots(Level::E6) => "roots-e6",
            Suite::Roots(Level::E7) => "roots-e7",
            Suite::Roots(Level::E8) => "roots-e8",
            Suite::WSpace => "wspace",
            Suite::RealForms => "realforms",
            Suite::All => "all",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub suite: Suite,
    pub seed: u64,
    /// Samples for the 𝔚 sweep; the sampled Jacobi and invariance sweeps use 250× and 25× as many.
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config { suite: Suite::All, seed: 1, samples: 20 }
    }
}

struct Checks {
    suite: &'static str,
    out: Vec<Check>,
}

impl Checks {
    fn push(&mut self, id: &str, anchor: &str, expected: impl Display, actual: impl Display, pass: bool) {
        self.out.push(Check {
            id: format!("{}.{id}", self.suite),
            anchor: anchor.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    fn eq<T: Display + PartialEq>(&mut self, id: &str, anchor: &str, expected: T, actual: T) {
        let pass = expected == actual;
        self.push(id, anchor, expected, actual, pass);
    }

    fn sweep(&mut self, id: &str, anchor: &str, s: &Sweep) {
        self.push(id, anchor, "0 failures", s.summary(), s.passed());
    }

    fn error(&mut self, id: &str, anchor: &str, expected: impl Display, e: impl Display) {
        self.push(id, anchor, expected, format!("error: {e}"), false);
    }
}

pub fn run(config: &Config) -> Report {
    let suites: Vec<Suite> = match config.suite {
        Suite::All => Suite::ALL.into_iter().filter(|s| *s != Suite::All).collect(),
        s => vec![s],
    };
    let mut checks = Vec::new();
    for s in suites {
        let mut c = Checks { suite: s.name(), out: Vec::new() };
        match s {
            Suite::Dims => dims(&mut c, config),
            Suite::Killing => killing_suite(&mut c, config),
            Suite::Triality => triality(&mut c, config),
            Suite::Roots(level) => roots(&mut c, level),
            Suite::WSpace => w_space(&mut c, config),
            Suite::RealForms => real_forms(&mut c),
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(c.out);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    Report {
        suite: config.suite.name().to_string(),
        seed: config.seed,
        summary: Summary { total: checks.len(), passed, failed: checks.len() - passed },
        checks,
    }
}

fn rng(config: &Config, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(config.seed);
    r.set_stream(stream);
    r
}

fn dims(c: &mut Checks, config: &Config) {
    let oct = Kind::Octonionic;
    let quat = Kind::Quaternionic;
    c.eq("f4-eps", "dim (f4^C)^{eps1,eps2}", 21, f4_eps().dim());
    c.eq("e6-eps", "dim (e6^C)^{eps1,eps2}", 35, e6_eps().dim());
    c.eq("e7-eps", "dim (e7^C)^{eps1,eps2}", 66, e7_eps().dim());
    c.eq("e8-eps", "dim (e8^C)^{eps1,eps2}", 133, e8_eps().dim());
    c.eq("f4", "dim Der J(3, C^C)", 52, f4(oct).dim());
    c.eq("e6", "dim e6^C on J(3, C^C)", 78, e6(oct).dim());
    c.eq("f4H", "dim Der J(3, H^C)", 21, f4(quat).dim());
    c.eq("e6H", "dim (e6,H)^C", 35, e6(quat).dim());
    c.eq("e7H", "dim (e7,H)^C", 66, e7_h().dim());
    c.eq("e8H", "dim (e8,H)^C", 133, e8_h().dim());

    let n = 250 * config.samples;
    let mut r = rng(config, 1);
    let lies: [(&str, &LieAlgebra); 8] = [
        ("f4-eps", &f4_eps().lie),
        ("e6-eps", &e6_eps().lie),
        ("e7-eps", &e7_eps().lie),
        ("e8-eps", &e8_eps().lie),
        ("f4H", &f4_h().lie),
        ("e6H", &e6_h().lie),
        ("e7H", &e7_h().lie),
        ("e8H", &e8_h().lie),
    ];
    for (name, lie) in lies {
        // Every triple up to dimension 35, sampled beyond.
        let budget = if lie.dim <= 35 { usize::MAX } else { n };
        let s = properties::jacobi(lie, &mut r, budget);
        c.sweep(&format!("jacobi-{name}"), "Jacobi identity on basis triples (all up to dim 35, else sampled)", &s);
    }

    let (expected, actual) = match cache_roundtrip(e8_eps()) {
        Ok(same) => ("identical document and structure constants", if same { "identical" } else { "differs" }),
        Err(e) => {
            c.error("cache-roundtrip-e8-eps", "structure-constants cache round trip", "identical", e);
            return;
        }
    };
    c.push("cache-roundtrip-e8-eps", "structure-constants cache round trip", expected, actual, actual == "identical");
}

/// Serializes a subalgebra, reads it back and serializes again.
pub fn cache_roundtrip<A: Ambient>(sub: &Subalgebra<A>) -> Result<bool, cache::CacheError> {
    let doc = cache::to_doc(sub);
    let text = serde_json::to_string(&doc).expect("serializable");
    let back: cache::StructureDoc = serde_json::from_str(&text).map_err(|e| cache::CacheError::Malformed {
        path: "<memory>".into(),
        msg: e.to_string(),
    })?;
    let rebuilt = cache::from_doc(sub.amb, sub.label(), &sub.basis, &back, std::path::Path::new("<memory>"))?;
    Ok(rebuilt.lie == sub.lie && serde_json::to_string(&cache::to_doc(&rebuilt)).expect("serializable") == text)
}

fn constant(p: &Proportionality) -> String {
    match (&p.constant, &p.first_violation) {
        (Some(k), _) => k.to_string(),
        (None, Some((i, j))) => format!("not proportional at ({i}, {j})"),
        (None, None) => "not proportional".into(),
    }
}

fn gram_text(g: &[Vec<Rational>]) -> String {
    let rows: Vec<String> = g.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

fn killing_suite(c: &mut Checks, config: &Config) {
    let quat_e7 = e7_h();
    let nu = nu_generator(quat_e7.amb.f.jdim());
    match killing::e7_h_self(&nu) {
        Ok((tr, inner)) => {
            c.eq("e7H-nu-trace", "tr(ad Phi(0,0,0,1))^2 on (e7,H)^C", Complex::frac(40, 3), tr);
            c.eq("e7H-nu-inner", "(Phi(0,0,0,1), Phi(0,0,0,1))_7", Complex::frac(-8, 3), inner);
        }
        Err(e) => c.error("e7H-nu", "tr(ad Phi(0,0,0,1))^2 on (e7,H)^C", "40/3", e),
    }
    match killing::constant_e7_h() {
        Ok(p) => c.push("e7H-constant", "B7H = k (,)_7 on all basis pairs", "-5", constant(&p), p.constant == Some(Rational::int(-5))),
        Err(e) => c.error("e7H-constant", "B7H = k (,)_7 on all basis pairs", "-5", e),
    }
    let jd = e8_h().amb.jdim();
    let one_tilde = E8Elem::r_tilde(jd, Complex::ONE);
    match killing::e8_h_self(&one_tilde) {
        Ok((tr, inner)) => {
            c.eq("e8H-1tilde-trace", "tr(ad 1~)^2 on (e8,H)^C", Complex::int(72), tr);
            c.eq("e8H-1tilde-inner", "(1~, 1~)_8", Complex::int(-8), inner);
        }
        Err(e) => c.error("e8H-1tilde", "tr(ad 1~)^2 on (e8,H)^C", "72", e),
    }
    match killing::constant_e8_h() {
        Ok(p) => c.push("e8H-constant", "B8H = k (,)_8 on all basis pairs", "-9", constant(&p), p.constant == Some(Rational::int(-9))),
        Err(e) => c.error("e8H-constant", "B8H = k (,)_8 on all basis pairs", "-9", e),
    }

    let amb = e8_h().amb;
    let one_lower = wspace::one_lower(jd);
    let b = amb.bracket(&one_tilde, &one_lower);
    c.push("bracket-1tilde-1lower", "[1~, 1_-]", "-2 1_-", describe_e8(&b), b == one_lower.scale(&Complex::int(-2)));
    let b = amb.bracket(&wspace::one_upper(jd), &one_lower);
    c.push("bracket-1upper-1lower", "[1^-, 1_-]", "1~", describe_e8(&b), b == one_tilde);

    // B4 = 3 tr(δδ') against tr(ad δ ad δ') on the whole 52-dim algebra.
    let full = f4_full();
    let brute = full.lie.killing_gram();
    let elems: Vec<_> = (0..full.dim()).map(|k| full.basis_element(k)).collect();
    let mismatch = (0..elems.len()).flat_map(|i| (0..elems.len()).map(move |j| (i, j))).find(|(i, j)| b4(&elems[*i], &elems[*j]) != *brute.get(*i, *j));
    let actual = match mismatch {
        None => "equal on all 52^2 pairs".to_string(),
        Some((i, j)) => format!("differs at ({i}, {j})"),
    };
    c.push("B4-f4", "B4 = 3 tr(delta delta') equals the trace form of f4^C", "equal on all 52^2 pairs", &actual, mismatch.is_none());

    for level in Level::ALL {
        let id = format!("closed-vs-brute-{}", level.label());
        let anchor = format!("closed Killing form of {} on Cartan pairs equals tr(ad ad) on the full algebra", level.label());
        match cached_root_system(level) {
            Ok(rs) => c.push(&id, &anchor, gram_text(&rs.brute_gram), gram_text(&rs.closed_gram), rs.closed_gram == rs.brute_gram),
            Err(e) => c.error(&id, &anchor, "equal Gram matrices", e),
        }
    }

    let f = &e8(Kind::Octonionic).e7.f;
    match killing::restriction_ratio(e8_eps(), |x, y| b8(f, x, y)) {
        Ok(p) => c.push("restriction-e8-eps", "trace form of (e8^C)^{eps1,eps2} = k B8 (k reported)", "a single constant", constant(&p), p.constant.is_some()),
        Err(e) => c.error("restriction-e8-eps", "trace form of (e8^C)^{eps1,eps2} = k B8", "a single constant", e),
    }

    let n = 25 * config.samples;
    let mut r = rng(config, 2);
    let algebras: [(&str, &LieAlgebra); 6] = [
        ("f4-eps", &f4_eps().lie),
        ("e6-eps", &e6_eps().lie),
        ("e7-eps", &e7_eps().lie),
        ("e8-eps", &e8_eps().lie),
        ("e7H", &e7_h().lie),
        ("e8H", &e8_h().lie),
    ];
    for (name, lie) in algebras {
        let gram = lie.killing_gram();
        let s = properties::ad_invariance(lie, &gram, &mut r, n);
        c.sweep(&format!("invariance-{name}"), "B([x,y],z) + B(y,[x,z]) = 0", &s);
    }
}

fn describe_e8(x: &E8Elem) -> String {
    match e8_h().amb.coords(x) {
        Ok(v) => e8_h().amb.describe(&v),
        Err(e) => format!("error: {e}"),
    }
}

fn triality(c: &mut Checks, config: &Config) {
    let one = Rational::ONE;
    let zero = Rational::ZERO;
    let mut r = rng(config, 3);
    let generic = [small_rational(&mut r), small_rational(&mut r), small_rational(&mut r)];
    let cases = [
        ("delta-e0", [one.clone(), zero.clone(), zero.clone()]),
        ("delta-e1", [zero.clone(), one.clone(), zero.clone()]),
        ("delta-e2", [zero.clone(), zero.clone(), one.clone()]),
        ("delta-generic", generic),
    ];
    for (name, l) in cases {
        let anchor = format!("L2, L3 of L1 = l0 iG01 + l1 iG23 + l2 i(G45+G67), (l0,l1,l2) = ({}, {}, {})", l[0], l[1], l[2]);
        match triality_companions(&so8_cartan(&l)) {
            Ok(t) => {
                let (m2, m3) = explicit_companions(&l);
                let pass = t.d2 == m2 && t.d3 == m3 && t.holds();
                let actual = if pass { "solved companions equal the explicit display" } else { "companions differ" };
                c.push(&format!("companions-{name}"), &anchor, "solved companions equal the explicit display", actual, pass);
            }
            Err(e) => c.error(&format!("companions-{name}"), &anchor, "companions exist", e),
        }
    }
    let n = config.samples;
    c.sweep("identity-sweep", "(D1 x)y + x(D2 y) = conj(D3 conj(xy)) for random D1", &properties::triality(&mut r, n));
    c.sweep("cayley-laws", "alternativity and N(xy) = N(x)N(y) in C^C", &properties::cayley_laws(&mut r, 10 * n));
    c.sweep("automorphisms", "eps1, eps2, gamma preserve the product", &properties::automorphisms(&mut r, 10 * n));
    for (name, ok) in properties::epsilon_relations() {
        let id = format!("relation-{}", name.split(' ').next().unwrap_or(name).replace('^', ""));
        c.push(&id, name, "holds", if ok { "holds" } else { "fails" }, ok);
    }
}

/// Root systems are expensive enough to compute once per process.
pub fn cached_root_system(level: Level) -> &'static Result<RootSystem, String> {
    static CELLS: [OnceLock<Result<RootSystem, String>>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let k = Level::ALL.iter().position(|l| *l == level).expect("listed level");
    CELLS[k].get_or_init(|| root_system(level).map_err(|e| e.to_string()))
}

fn roots(c: &mut Checks, level: Level) {
    let table = level.table();
    let label = level.label();
    let rs = match cached_root_system(level) {
        Ok(rs) => rs,
        Err(e) => {
            c.error("root-system", &format!("root decomposition of {label}"), "a regular decomposition", e);
            return;
        }
    };
    let rank = level.rank();
    c.eq("rank", "number of Cartan generators", rank, rs.rank());
    c.push("cartan-abelian", "Cartan generators commute", "true", rs.abelian, rs.abelian);
    c.eq("cartan-self-normalizing", "dim of the normalizer of the Cartan subalgebra", rank, rs.normalizer_dim);
    c.eq("zero-weight", "dim of the zero weight space", rank, rs.zero_weight_dim);
    c.eq("root-count", "number of roots", table.root_count, rs.roots.len());
    c.eq("dimension-count", "rank + number of roots = dim", rs.dim, rank + rs.roots.len());
    let symmetric = rs.roots.iter().all(|a| rs.roots.contains(&a.iter().map(|x| -x).collect::<Vec<_>>()));
    c.push("symmetric", "-alpha is a root with alpha", "true", symmetric, symmetric);
    c.push("dual-basis", "closed form is nondegenerate on the Cartan subalgebra", "true", rs.dual_basis_ok, rs.dual_basis_ok);

    let cmp = rs.compare(&table);
    let actual = if cmp.roots_match() {
        format!("{} roots, equal as sets", rs.roots.len())
    } else {
        format!("missing {:?}, extra {:?}, malformed {:?}", cmp.missing, cmp.extra, cmp.malformed)
    };
    c.push("table-set", "computed roots equal the tabulated roots as a set", format!("{} roots, equal as sets", table.root_count), actual, cmp.roots_match());
    if level == Level::F4 {
        c.push(
            "delta-display",
            "the displayed root list shows 7 pairs, the proof table 9 (known flag)",
            "9 pairs",
            format!("{} pairs computed", rs.roots.len() / 2),
            rs.roots.len() == 18,
        );
        let spot = cmp.expansions.iter().find(|e| e.form == "-l0 + l1");
        let got = spot.and_then(|e| e.computed.clone()).map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
        let pass = spot.is_some_and(|e| e.ok()) && got.as_deref() == Some("2 2 1");
        c.push("spot-expansion", "-(l0 - l1) = 2a1 + 2a2 + a3", "2 2 1", got.unwrap_or_else(|| "absent".into()), pass);
    }
    c.push("simple-are-roots", "the tabulated simple roots are roots", "true", cmp.simple_are_roots, cmp.simple_are_roots);
    c.push("fundamental", "every root is a nonnegative or nonpositive integer combination of Pi", "true", cmp.fundamental, cmp.fundamental);
    let bad: Vec<&str> = cmp.expansions.iter().filter(|e| !e.ok()).map(|e| e.form.as_str()).collect();
    c.push(
        "expansions",
        "tabulated expansions of the positive roots in Pi",
        format!("{} of {} exact", cmp.expansions.len(), cmp.expansions.len()),
        if bad.is_empty() { format!("{} of {} exact", cmp.expansions.len(), cmp.expansions.len()) } else { format!("wrong: {}", bad.join(", ")) },
        bad.is_empty() && cmp.expansions.len() == table.root_count / 2,
    );
    c.push("positive-set", "tabulated positive roots are the Pi-positive roots", "true", cmp.positive_set_ok, cmp.positive_set_ok);
    for v in &cmp.inner {
        let id: String = v.name.chars().filter(|ch| ch.is_ascii_alphanumeric() || *ch == ',').collect();
        c.push(&format!("inner-{}", id.replace(',', "-")), &format!("inner product {}", v.name), &v.stated, &v.computed, v.ok());
    }
    for v in &cmp.canonical {
        let show = |x: &[Rational]| x.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" ");
        c.push(&format!("canonical-{}", v.name.replace("H_", "")), &format!("canonical element of {} in (l0,l1,l2,t1,t2,t3,m,w)", v.name), show(&v.stated), show(&v.computed), v.ok());
    }
    let cm = cmp.cartan_matrix.as_ref().map(|m| m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("; "));
    c.push("cartan-matrix", "A_ij = 2(ai,aj)/(aj,aj) is integral", "integral", cm.clone().unwrap_or_else(|| "not integral".into()), cm.is_some());
    let dt = cmp.dynkin_table.clone().unwrap_or_else(|| "none".into());
    c.eq("dynkin", "Dynkin type of the tabulated Pi", table.dynkin.clone(), dt);
    let dl = cmp.dynkin_lex.clone().unwrap_or_else(|| "none".into());
    c.eq("dynkin-lex", "Dynkin type of a lexicographic simple system", table.dynkin.clone(), dl);
    c.push(
        "printed-corrections",
        "tabulated entries read differently from their printed form",
        "listed in the table file",
        table.corrections.len(),
        true,
    );
}

fn w_space(c: &mut Checks, config: &Config) {
    for (tag, norm) in [("e8H", Normalization::Quaternionic), ("e8-eps", Normalization::EpsilonFixed)] {
        let anchor = format!("(1_- x 1_-) R1 = 0 for every basis R1 ({})", norm.label());
        let x = match norm.coords(&wspace::one_lower(norm.jdim())) {
            Ok(x) => x,
            Err(e) => {
                c.error(&format!("one-lower-{tag}"), &anchor, "annihilates the basis", e);
                continue;
            }
        };
        match wspace::first_survivor(norm, &x) {
            Ok(s) => c.push(
                &format!("one-lower-{tag}"),
                &anchor,
                "annihilates all 133 basis elements",
                s.map_or("annihilates all 133 basis elements".to_string(), |k| format!("survives on basis element {k}")),
                s.is_none(),
            ),
            Err(e) => c.error(&format!("one-lower-{tag}"), &anchor, "annihilates the basis", e),
        }
        c.eq(&format!("orbit-dim-{tag}"), &format!("dim [g, 1_-], tangent dimension of the locus ({})", norm.label()), 34, wspace::orbit_dim(norm, &x));
    }

    let jd = e8_h().amb.jdim();
    let quat = |x: &E8Elem| Normalization::Quaternionic.coords(x);
    let dot = wspace::one_dot_upper(jd);
    let member = quat(&dot).and_then(|v| wspace::in_w(Normalization::Quaternionic, &v));
    c.push("one-dot-upper", "(0, 1., 0, 0, 0, 0) lies in W", "true", fmt_result(&member), member == Ok(true));
    match wspace::w_conditions(&wspace::one_lower(jd)) {
        Ok(ok) => c.push("conditions-one-lower", "the 13 conditions hold for 1_-", "13 of 13", format!("{} of 13", ok.iter().filter(|b| **b).count()), ok.iter().all(|b| *b)),
        Err(e) => c.error("conditions-one-lower", "the 13 conditions hold for 1_-", "13 of 13", e),
    }
    match wspace::w_conditions(&E8Elem::r_tilde(jd, Complex::ONE)) {
        Ok(ok) => c.push("conditions-one-tilde", "the sixth condition fails for 1~: {P,Q} - 16(st + r^2) = -16", "false", ok[5], !ok[5]),
        Err(e) => c.error("conditions-one-tilde", "the sixth condition fails for 1~", "false", e),
    }

    // Members exp(ad N2)exp(ad N1)1_- and non-members (perturbed members, random elements).
    let mut r = rng(config, 4);
    let mut agree = 0;
    let mut members_ok = 0;
    let mut non_members_ok = 0;
    let mut errors = Vec::new();
    let n = config.samples;
    let half = n.div_ceil(2);
    for k in 0..2 * n {
        let sample = match k {
            k if k < n => wspace::random_member(&mut r),
            k if k < n + half => wspace::perturbed_member(&mut r),
            _ => Ok(wspace::random_element(&mut r)),
        };
        let verdict = sample.map_err(|e| e.to_string()).and_then(|x| {
            let all = wspace::w_conditions(&x).map_err(|e| e.to_string())?.iter().all(|b| *b);
            let v = quat(&x).map_err(|e| e.to_string())?;
            let w = wspace::in_w(Normalization::Quaternionic, &v).map_err(|e| e.to_string())?;
            Ok((all, w))
        });
        match verdict {
            Ok((all, w)) => {
                agree += usize::from(all == w);
                if k < n {
                    members_ok += usize::from(all && w);
                } else {
                    non_members_ok += usize::from(!all && !w);
                }
            }
            Err(e) => errors.push(format!("sample {k}: {e}")),
        }
    }
    let tail = if errors.is_empty() { String::new() } else { format!(", {}", errors.join("; ")) };
    c.push("members", "exp(ad N2) exp(ad N1) 1_- satisfies the 13 conditions and R x R = 0", n, format!("{members_ok}{tail}"), members_ok == n);
    c.push("non-members", "perturbed members and random elements fail both tests", n, non_members_ok, non_members_ok == n);
    c.push("equivalence", "13 conditions hold iff R x R annihilates the basis", 2 * n, agree, agree == 2 * n && 2 * n >= 20);

    let amb = e8_h().amb;
    let f = amb.f();
    let mut exact = 0;
    let mut nilpotent = 0;
    let mut failure = None;
    for k in 0..n {
        let g = wspace::random_raising(&mut r, f, 0.2);
        let one = wspace::one_lower(jd);
        match wspace::exp_ad_truncated(amb, &g, &one, 4) {
            Ok(x) if x == wspace::exp_closed_form(f, &g.p, &g.s) => exact += 1,
            Ok(_) => failure = failure.or(Some(format!("sample {k} differs"))),
            Err(e) => failure = failure.or(Some(format!("sample {k}: {e}"))),
        }
        let quartic = f.skew(&g.p, &f.apply(&f.cross(&g.p, &g.p), &g.p));
        let fourth = E8Elem::s_upper(jd, &quartic * &Complex::frac(1, 4));
        if wspace::ad_power(amb, &g, &one, 4) == fourth && wspace::ad_power(amb, &g, &one, 5).is_zero() {
            nilpotent += 1;
        }
    }
    c.push(
        "exp-closed-form",
        "exp(ad(0,P1,0,0,s1,0)) 1_- equals its closed form",
        n,
        failure.map_or(exact.to_string(), |f| format!("{exact}, {f}")),
        exact == n,
    );
    c.push(
        "ad-power",
        "Theta^4 1_- = (1/4){P1,(P1 x P1)P1} in the s-slot, Theta^5 1_- = 0",
        n,
        nilpotent,
        nilpotent == n,
    );
}

fn fmt_result<T: Display, E: Display>(r: &Result<T, E>) -> String {
    match r {
        Ok(x) => x.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn real_forms(c: &mut Checks) {
    let e7 = e7_h();
    match real_form(e7, &|x| e7.amb.tau_lambda(x)) {
        Ok(rf) => {
            c.eq("e7H", "dim over Q of the fixed points of tau lambda on (e7,H)^C", 66, rf.dim());
            c.push("e7H-involutive", "(tau lambda)^2 = 1", "true", rf.involutive, rf.involutive);
        }
        Err(e) => c.error("e7H", "real form of (e7,H)^C", 66, e),
    }
    let e8q = e8_h();
    match real_form(e8q, &|x| e8q.amb.tau_lambda_omega(x)) {
        Ok(rf) => {
            c.eq("e8H", "dim over Q of the fixed points of tau lambda_omega on (e8,H)^C", 133, rf.dim());
            c.push("e8H-involutive", "(tau lambda_omega)^2 = 1", "true", rf.involutive, rf.involutive);
        }
        Err(e) => c.error("e8H", "real form of (e8,H)^C", 133, e),
    }

    for (tag, norm) in [("e8-eps", Normalization::EpsilonFixed), ("e8H", Normalization::Quaternionic)] {
        let anchor = format!("centralizer of 1_- in {}", norm.label().split(',').next().unwrap_or(""));
        let x = match norm.coords(&wspace::one_lower(norm.jdim())) {
            Ok(x) => x,
            Err(e) => {
                c.error(&format!("centralizer-{tag}"), &anchor, 99, e);
                continue;
            }
        };
        let (cent, shape_ok) = match norm {
            Normalization::EpsilonFixed => centralizer_shape(e8_eps(), &x),
            Normalization::Quaternionic => centralizer_shape(e8_h(), &x),
        };
        c.eq(&format!("centralizer-{tag}"), &anchor, 99, cent);
        c.push(&format!("centralizer-shape-{tag}"), "centralizer elements have the form (Phi, 0, Q, 0, 0, t)", "true", shape_ok, shape_ok);
    }
    let zero = e8_h().lie.centralizer(&SVec::new()).len();
    c.eq("centralizer-zero", "centralizer of 0 is everything", 133, zero);
}

fn centralizer_shape(sub: &Subalgebra<crate::lie::E8Lie>, x: &SVec) -> (usize, bool) {
    let cent = sub.lie.centralizer(x);
    let ok = cent.iter().all(|v| {
        let y = sub.element(v);
        y.p.is_zero() && y.r.is_zero() && y.s.is_zero()
    });
    (cent.len(), ok)
}

/// One row per root: generator values, the root as a form in the table
/// variables, and a root vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRow {
    pub values: Vec<String>,
    pub form: String,
    pub root_vector: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootExport {
    pub level: String,
    pub generators: Vec<String>,
    pub rank: usize,
    pub roots: Vec<RootRow>,
    pub cartan_matrix: Option<Vec<Vec<i64>>>,
    pub dynkin: Option<String>,
}

pub fn root_export(level: Level) -> Result<RootExport, String> {
    let rs = cached_root_system(level).as_ref().map_err(Clone::clone)?;
    let cmp = rs.compare(&level.table());
    let roots = rs
        .roots
        .iter()
        .zip(&rs.root_vectors)
        .map(|(a, v)| RootRow {
            values: a.iter().map(|x| x.to_string()).collect(),
            form: format_form(&rs.form_of(a)),
            root_vector: v.clone(),
        })
        .collect();
    Ok(RootExport {
        level: level.label().to_string(),
        generators: level.generator_labels().iter().map(|s| s.to_string()).collect(),
        rank: rs.rank(),
        roots,
        cartan_matrix: cmp.cartan_matrix,
        dynkin: cmp.dynkin_table,
    })
}

impl RootExport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# Roots of {} (rank {}, {} roots)\n\n", self.level, self.rank, self.roots.len());
        out += &format!("| {} | form | root vector |\n", self.generators.join(" | "));
        out += &format!("|{}---|---|\n", "---|".repeat(self.generators.len()));
        for r in &self.roots {
            out += &format!("| {} | {} | {} |\n", r.values.join(" | "), r.form, r.root_vector.replace('|', "\\|"));
        }
        if let Some(m) = &self.cartan_matrix {
            out += "\nCartan matrix:\n\n";
            for row in m {
                out += &format!("    {}\n", row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "));
            }
        }
        if let Some(d) = &self.dynkin {
            out += &format!("\nDynkin type: {d}\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("roots-g2"), None);
    }

    #[test]
    fn markdown_escapes_and_sections() {
        let report = Report {
            suite: "all".into(),
            seed: 3,
            checks: vec![
                Check { id: "dims.a".into(), anchor: "x|y".into(), expected: "1".into(), actual: "1".into(), pass: true },
                Check { id: "killing.b".into(), anchor: "z".into(), expected: "2".into(), actual: "3".into(), pass: false },
            ],
            summary: Summary { total: 2, passed: 1, failed: 1 },
        };
        let md = report.to_markdown();
        assert!(md.contains("## dims") && md.contains("## killing"));
        assert!(md.contains("x\\|y"));
        assert!(md.contains("| NO |"));
        assert!(!report.all_passed());
    }

    #[test]
    fn triality_suite_is_deterministic_and_passes() {
        let config = Config { suite: Suite::Triality, seed: 9, samples: 2 };
        let a = run(&config);
        assert!(a.all_passed(), "{}", a.to_markdown());
        assert_eq!(a.to_json(), run(&config).to_json());
    }

    #[test]
    fn small_cache_round_trip() {
        assert!(cache_roundtrip(f4_eps()).unwrap());
    }

    #[test]
    fn export_lists_every_root() {
        let e = root_export(Level::F4).unwrap();
        assert_eq!(e.roots.len(), 18);
        assert_eq!(e.dynkin.as_deref(), Some("C3"));
        let md = e.to_markdown();
        assert_eq!(md.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| H_")).count(), 18);
        let back: RootExport = serde_json::from_str(&e.to_json()).unwrap();
        assert_eq!(back, e);
    }
}
