//! The regression suite: every claim about the implemented chains that can
//! be checked mechanically, each with its expected verdict.

use std::cell::Cell;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::laws::bl_law_violation;
use crate::algebra::{Chain, ChainElement, Descriptor, Order, Rational};
use crate::embedding::{
    chang_fragment, chang_into_rotation, check_embedding, close_under_neg_oplus, find_embedding, partial_subalgebra,
    SearchBudget, SearchOutcome,
};
use crate::error::CheckError;
use crate::formula::{is_tautology, schema, schemas};

use super::source::{self, default_source, ValuationSource};
use super::{check_equation, enumerate_finite_sums, equation, Config, Verdict};

/// Verdict of a claim's statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Fails,
    /// The check itself could not run.
    Error,
}

/// One line of the suite report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub algebra: String,
    pub source: String,
    pub expected: Outcome,
    pub verdict: Outcome,
    pub passed: bool,
    pub witness: Option<String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub checked: u64,
    pub detail: Option<String>,
    pub elapsed_ms: Option<u64>,
}

/// All claim records, in a fixed order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub records: Vec<ClaimRecord>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    pub fn find(&self, claim: &str) -> Option<&ClaimRecord> {
        self.records.iter().find(|r| r.claim == claim)
    }

    /// One JSON object per line.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn render_human(&self) -> String {
        let header = [
            "claim",
            "algebra",
            "expected",
            "verdict",
            "ok",
            "checked",
            "source",
            "witness / detail",
        ];
        let rows: Vec<[String; 8]> = self
            .records
            .iter()
            .map(|r| {
                let mut note = String::new();
                if let Some(w) = &r.witness {
                    let _ = write!(note, "{{{w}}}");
                }
                if let (Some(l), Some(rr)) = (&r.lhs, &r.rhs) {
                    let _ = write!(note, " lhs {l}, rhs {rr}");
                }
                if let Some(d) = &r.detail {
                    if !note.is_empty() {
                        note.push_str("; ");
                    }
                    note.push_str(d);
                }
                if let Some(ms) = r.elapsed_ms {
                    let _ = write!(note, " [{ms} ms]");
                }
                [
                    r.claim.clone(),
                    r.algebra.clone(),
                    outcome_name(r.expected).into(),
                    outcome_name(r.verdict).into(),
                    if r.passed { "PASS" } else { "FAIL" }.into(),
                    r.checked.to_string(),
                    r.source.clone(),
                    note.trim().to_string(),
                ]
            })
            .collect();
        let mut width = header.map(str::len);
        for row in &rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let line = |cells: &[&str], out: &mut String| {
            for (i, c) in cells.iter().enumerate() {
                if i + 1 == cells.len() {
                    out.push_str(c);
                } else {
                    let pad = width[i] - c.chars().count();
                    out.push_str(c);
                    out.push_str(&" ".repeat(pad + 2));
                }
            }
            out.push('\n');
        };
        line(&header, &mut out);
        for row in &rows {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            line(&cells, &mut out);
        }
        let passed = self.records.iter().filter(|r| r.passed).count();
        let _ = writeln!(out, "{passed}/{} claims as expected", self.records.len());
        out
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::Error => "error",
    }
}

/// What a single check established.
struct Finding {
    source: String,
    verdict: Outcome,
    witness: Option<String>,
    lhs: Option<String>,
    rhs: Option<String>,
    checked: u64,
    detail: Option<String>,
    /// Extra requirement of the claim (exact witness, minimum sample size).
    requirement: Result<(), String>,
}

impl Finding {
    fn new(source: impl Into<String>, verdict: Outcome, checked: u64) -> Finding {
        Finding {
            source: source.into(),
            verdict,
            witness: None,
            lhs: None,
            rhs: None,
            checked,
            detail: None,
            requirement: Ok(()),
        }
    }

    fn of(v: &Verdict, src: &ValuationSource) -> Finding {
        match v {
            Verdict::Holds { checked, source, .. } => Finding::new(source.clone(), Outcome::Holds, *checked),
            Verdict::Fails { valuation, lhs, rhs } => {
                let mut f = Finding::new(src.to_string(), Outcome::Fails, 0);
                f.witness = Some(valuation.to_string());
                f.lhs = Some(lhs.to_string());
                f.rhs = Some(rhs.to_string());
                f
            }
        }
    }

    fn detail(mut self, d: impl Into<String>) -> Finding {
        self.detail = Some(d.into());
        self
    }

    fn require(mut self, ok: bool, what: impl Into<String>) -> Finding {
        if ok {
            return self;
        }
        let what = what.into();
        self.requirement = match self.requirement {
            Ok(()) => Err(what),
            Err(prev) => Err(format!("{prev}; {what}")),
        };
        self
    }
}

/// Short tag used in claim ids.
fn tag(chain: &Chain) -> String {
    match chain.descriptor() {
        Descriptor::StandardMV => "stdMV".into(),
        Descriptor::StandardGodel => "stdG".into(),
        Descriptor::StandardProduct => "prod".into(),
        Descriptor::StandardCancellativeHoop => "canc".into(),
        Descriptor::Chang => "chang".into(),
        Descriptor::FiniteMV(k) => format!("mv{k}"),
        Descriptor::FiniteGodel(k) => format!("g{k}"),
        d if *d == Descriptor::v() => "V".into(),
        d if *d == Descriptor::omega_v() => "omegaV".into(),
        d if *d == Descriptor::chang_plus_luk() => "chang-luk".into(),
        d => d
            .to_string()
            .chars()
            .filter_map(|c| match c {
                'a'..='z' | 'A'..='Z' | '0'..='9' => Some(c.to_ascii_lowercase()),
                '+' => Some('-'),
                _ => None,
            })
            .collect::<String>()
            .replace("--", "-"),
    }
}

/// Chains whose BL laws are checked.
const LAW_CHAINS: &[&str] = &[
    "G(2)",
    "G(4)",
    "MV(5)",
    "MV(8)",
    "MV(2) ++ MV(3)",
    "LukStd",
    "GodStd",
    "ProdStd",
    "Canc",
    "C",
    "V",
    "omega*V",
    "C ++ LukStd",
];

/// The implemented MV chains.
const MV_CHAINS: &[&str] = &[
    "LukStd", "MV(2)", "MV(3)", "MV(4)", "MV(5)", "MV(6)", "MV(7)", "MV(8)", "C", "V",
];

struct Runner<'a> {
    config: &'a Config,
    records: Vec<ClaimRecord>,
}

fn chain(text: &str) -> Chain {
    Chain::parse(text).expect("suite chains are valid")
}

impl Runner<'_> {
    fn random(&self) -> ValuationSource {
        ValuationSource::Random {
            count: self.config.sample_count,
            seed: self.config.seed,
            denom: self.config.denominator_bound.max(1),
        }
    }

    fn grid(&self) -> ValuationSource {
        ValuationSource::Grid(self.config.denominator_bound.max(1))
    }

    fn mixed(&self, parts: Vec<ValuationSource>) -> ValuationSource {
        ValuationSource::Mixed(parts)
    }

    /// The configured source for a one-variable identity on an MV chain.
    fn mv_source(&self, c: &Chain) -> ValuationSource {
        match c.descriptor() {
            Descriptor::Chang => ValuationSource::ChangIndices(self.config.chang_index_bound),
            _ if c.is_finite() => ValuationSource::Exhaustive,
            _ if *c.descriptor() == Descriptor::v() => self.mixed(vec![self.grid(), self.random()]),
            _ => self.mixed(vec![self.grid(), self.random()]),
        }
    }

    fn record(
        &mut self,
        claim: impl Into<String>,
        algebra: impl Into<String>,
        expected: Outcome,
        check: impl FnOnce(&Self) -> Result<Finding, CheckError>,
    ) {
        let start = Instant::now();
        let result = check(self);
        let elapsed_ms = self.config.timing.then(|| start.elapsed().as_millis() as u64);
        let rec = match result {
            Ok(f) => {
                let mut detail = f.detail;
                if let Err(why) = &f.requirement {
                    detail = Some(match detail {
                        Some(d) => format!("{d}; unmet: {why}"),
                        None => format!("unmet: {why}"),
                    });
                }
                ClaimRecord {
                    claim: claim.into(),
                    algebra: algebra.into(),
                    source: f.source,
                    expected,
                    verdict: f.verdict,
                    passed: f.verdict == expected && f.requirement.is_ok(),
                    witness: f.witness,
                    lhs: f.lhs,
                    rhs: f.rhs,
                    checked: f.checked,
                    detail,
                    elapsed_ms,
                }
            }
            Err(e) => ClaimRecord {
                claim: claim.into(),
                algebra: algebra.into(),
                source: String::new(),
                expected,
                verdict: Outcome::Error,
                passed: false,
                witness: None,
                lhs: None,
                rhs: None,
                checked: 0,
                detail: Some(e.to_string()),
                elapsed_ms,
            },
        };
        self.records.push(rec);
    }

    fn equation_claim(&mut self, claim: String, eq: &str, c: &Chain, src: ValuationSource, expected: Outcome) {
        let e = equation(eq).expect("catalogue equation");
        self.record(claim, c.to_string(), expected, |_| {
            Ok(Finding::of(&check_equation(&e, c, &src)?, &src))
        });
    }

    fn bl_laws(&mut self) {
        for text in LAW_CHAINS {
            let c = chain(text);
            let base = default_source(&c, self.config, 3);
            let src = if c.is_finite() {
                self.mixed(vec![base, self.random()])
            } else {
                base
            };
            self.record(format!("bl-laws-{}", tag(&c)), c.to_string(), Outcome::Holds, |_| {
                let vars: Vec<String> = ["z", "x", "y"].map(String::from).to_vec();
                let law = Cell::new(None);
                let v = source::run(&c, &vars, &src, &mut |t| {
                    Ok(bl_law_violation(&c, &t[0], &t[1], &t[2])?.map(|name| {
                        law.set(Some(name));
                        (t[1].clone(), t[2].clone())
                    }))
                })?;
                let mut f = Finding::of(&v, &src);
                if let Some(name) = law.get() {
                    f = f.detail(format!("violated: {name}"));
                    f.lhs = None;
                    f.rhs = None;
                }
                let n = f.checked;
                Ok(f.require(v.fails() || n >= 10_000, format!("only {n} tuples")))
            });
        }
        for text in ["MV(5)", "LukStd", "C", "V"] {
            let c = chain(text);
            let src = self.mv_source(&c);
            self.equation_claim(format!("involution-{}", tag(&c)), "involution", &c, src, Outcome::Holds);
        }
        for text in ["Canc", "MV(6)", "LukStd"] {
            let c = chain(text);
            let src = default_source(&c, self.config, 2);
            self.equation_claim(format!("wajsberg-{}", tag(&c)), "wajsberg", &c, src, Outcome::Holds);
        }
        let canc = chain("Canc");
        let src = default_source(&canc, self.config, 2);
        self.equation_claim("cancellative-canc".into(), "cancellative", &canc, src, Outcome::Holds);
    }

    fn uplus_claims(&mut self) {
        for text in MV_CHAINS {
            let c = chain(text);
            let src = match c.descriptor() {
                Descriptor::Chang => ValuationSource::ChangIndices(25),
                _ if *c.descriptor() == Descriptor::v() => self.random(),
                _ => self.mv_source(&c),
            };
            self.equation_claim(
                format!("uplus-eq-oplus-{}", tag(&c)),
                "uplus-oplus",
                &c,
                src,
                Outcome::Holds,
            );
        }
        let canc = chain("Canc");
        let src = self.random();
        self.equation_claim("uplus-top-canc".into(), "uplus-top", &canc, src, Outcome::Holds);

        for text in ["C ++ LukStd", "ProdStd", "omega*V"] {
            let c = chain(text);
            let src = self.random();
            self.record(
                format!("uplus-cross-join-{}", tag(&c)),
                c.to_string(),
                Outcome::Holds,
                |_| {
                    let vars = ["x", "y"].map(String::from).to_vec();
                    let cross = Cell::new(0u64);
                    let v = source::run(&c, &vars, &src, &mut |t| match (t[0].component(), t[1].component()) {
                        (Some(i), Some(j)) if i != j => {
                            cross.set(cross.get() + 1);
                            let u = c.raw_uplus(&t[0], &t[1])?;
                            let m = c.raw_join(&t[0], &t[1])?;
                            Ok((u != m).then_some((u, m)))
                        }
                        _ => Ok(None),
                    })?;
                    let mut f = Finding::of(&v, &src);
                    f.checked = cross.get();
                    let n = f.checked;
                    Ok(f.detail("cross-component pairs only")
                        .require(v.fails() || n >= 1_000, format!("only {n} cross pairs")))
                },
            );
        }
    }

    fn cha_claims(&mut self) {
        let holds: [(&str, ValuationSource); 5] = [
            ("C", ValuationSource::ChangIndices(self.config.chang_index_bound)),
            ("V", self.random()),
            ("omega*V", self.random()),
            ("GodStd", self.grid()),
            ("ProdStd", self.grid()),
        ];
        for (text, src) in holds {
            let c = chain(text);
            self.equation_claim(format!("cha-holds-{}", tag(&c)), "cha", &c, src, Outcome::Holds);
        }

        let luk = chain("LukStd");
        let e = equation("cha").expect("cha");
        let src = ValuationSource::Grid(5);
        self.record("cha-fails-stdMV", luk.to_string(), Outcome::Fails, |_| {
            let v = check_equation(&e, &luk, &src)?;
            let f = Finding::of(&v, &src);
            let exact = f.witness.as_deref() == Some("x=2/5")
                && f.lhs.as_deref() == Some("3/5")
                && f.rhs.as_deref() == Some("0");
            Ok(f.require(exact, "witness x=2/5 with lhs 3/5, rhs 0"))
        });
        for k in 3..=8 {
            let c = Chain::new(Descriptor::FiniteMV(k)).expect("MV(k)");
            self.equation_claim(
                format!("cha-fails-{}", tag(&c)),
                "cha",
                &c,
                ValuationSource::Exhaustive,
                Outcome::Fails,
            );
        }

        let cl = chain("C ++ LukStd");
        let src = default_source(&cl, self.config, 1);
        self.equation_claim("p0-holds-chang-luk".into(), "p0", &cl, src.clone(), Outcome::Holds);
        self.record("cha-fails-chang-luk", cl.to_string(), Outcome::Fails, |_| {
            let v = check_equation(&e, &cl, &src)?;
            let in_second = v
                .witness()
                .and_then(|w| w.get("x"))
                .is_some_and(|x| x.component() == Some(1));
            Ok(Finding::of(&v, &src).require(in_second, "witness in component 1"))
        });

        let cha_mv = equation("cha-mv").expect("cha-mv");
        for text in MV_CHAINS {
            let c = chain(text);
            let src = self.mv_source(&c);
            self.record(
                format!("cha-agrees-cha-mv-{}", tag(&c)),
                c.to_string(),
                Outcome::Holds,
                |_| {
                    let a = check_equation(&e, &c, &src)?;
                    let b = check_equation(&cha_mv, &c, &src)?;
                    let same = a.holds() == b.holds();
                    let f = Finding::new(src.to_string(), if same { Outcome::Holds } else { Outcome::Fails }, 2);
                    Ok(f.detail(format!("cha {}, cha-mv {}", verdict_word(&a), verdict_word(&b))))
                },
            );
        }
        self.record("cha-mv-differs-chang-luk", cl.to_string(), Outcome::Holds, |_| {
            let a = check_equation(&e, &cl, &src)?;
            let b = check_equation(&cha_mv, &cl, &src)?;
            let differ = a.fails() && b.holds();
            let f = Finding::new(src.to_string(), if differ { Outcome::Holds } else { Outcome::Fails }, 2);
            Ok(f.detail(format!("cha {}, cha-mv {}", verdict_word(&a), verdict_word(&b))))
        });

        self.record(
            "finite-blchang-is-godel",
            "finite MV sums of size <= 6",
            Outcome::Holds,
            |_| {
                let chains = enumerate_finite_sums(6);
                let mut mismatch = Vec::new();
                for c in &chains {
                    let boolean = c
                        .components()
                        .map_or(c.size() == Some(2), |cs| cs.iter().all(|x| x.size() == Some(2)));
                    let v = check_equation(&e, c, &ValuationSource::Exhaustive)?;
                    if v.holds() != boolean {
                        mismatch.push(c.to_string());
                    }
                }
                let f = Finding::new(
                    "exhaustive",
                    if mismatch.is_empty() {
                        Outcome::Holds
                    } else {
                        Outcome::Fails
                    },
                    chains.len() as u64,
                );
                Ok(if mismatch.is_empty() {
                    f.detail(format!("{} sums: cha holds exactly on the sums of MV(2)", chains.len()))
                } else {
                    f.detail(format!("mismatch on {}", mismatch.join(", ")))
                })
            },
        );
    }

    fn axiom_claims(&mut self) {
        for text in LAW_CHAINS.iter().filter(|t| **t != "Canc") {
            let c = chain(text);
            self.record(format!("bl-axioms-{}", tag(&c)), c.to_string(), Outcome::Holds, |r| {
                let mut checked = 0;
                let mut sources = Vec::new();
                for s in schemas().iter().filter(|s| s.name.starts_with('A')) {
                    let f = s.instantiate_simple();
                    let src = default_source(&c, r.config, f.free_vars().len());
                    match is_tautology(&f, &c, &src)? {
                        Verdict::Holds { checked: n, source, .. } => {
                            checked += n;
                            if !sources.contains(&source) {
                                sources.push(source);
                            }
                        }
                        v => {
                            let mut out = Finding::of(&v, &src).detail(format!("{} fails", s.name));
                            out.checked = checked;
                            return Ok(out);
                        }
                    }
                }
                Ok(Finding::new(sources.join(" | "), Outcome::Holds, checked).detail("A1-A7 (A5 as A5a, A5b)"))
            });
        }
        let g3 = chain("G(3)");
        self.record("inv-fails-g3", g3.to_string(), Outcome::Fails, |_| {
            let f = schema("INV").expect("INV").instantiate_simple();
            let src = ValuationSource::Exhaustive;
            let out = Finding::of(&is_tautology(&f, &g3, &src)?, &src);
            let ok = out.witness.as_deref() == Some("p=1/2");
            Ok(out.require(ok, "witness p=1/2"))
        });
    }

    fn perfect_claims(&mut self) {
        let cutoff = self.config.chang_index_bound.max(64);
        let sources = [
            (
                "C",
                self.mixed(vec![
                    ValuationSource::ChangIndices(self.config.chang_index_bound),
                    self.random(),
                ]),
            ),
            ("V", self.mixed(vec![self.grid(), self.random()])),
        ];
        for (text, src) in sources {
            let c = chain(text);
            self.record(format!("perfect-{}", tag(&c)), c.to_string(), Outcome::Holds, |_| {
                let vars = vec!["x".to_string()];
                let v = source::run(&c, &vars, &src, &mut |t| {
                    let ok = c.perfect_condition(&t[0], cutoff)?;
                    Ok((!ok).then(|| (t[0].clone(), c.raw_neg(&t[0]).expect("bounded"))))
                })?;
                Ok(Finding::of(&v, &src))
            });
        }
        let luk = chain("LukStd");
        self.record("perfect-fails-stdMV", luk.to_string(), Outcome::Fails, |_| {
            let x = ChainElement::rat(3, 5);
            let perfect = luk.perfect_condition(&x, cutoff)?;
            let ox = luk.ord(&x, cutoff)?;
            let on = luk.ord(&luk.neg(&x)?, cutoff)?;
            let f = Finding::new("x=3/5", if perfect { Outcome::Holds } else { Outcome::Fails }, 1);
            let mut f = f.detail(format!("ord(x)={}, ord(~x)={}", ord_word(ox), ord_word(on)));
            f.witness = Some("x=3/5".into());
            Ok(f.require(ox == Order::Finite(3) && on == Order::Finite(2), "ord 3 and 2"))
        });
    }

    fn embedding_claims(&mut self) {
        let v = chain("V");
        self.record("chang-into-V", v.to_string(), Outcome::Holds, |_| {
            let p = chang_fragment(5)?;
            let m = chang_into_rotation(5, &Rational::new(1, 2))?;
            let report = check_embedding(&m, &p, &v)?;
            let f = Finding::new(
                "a_n -> pos 2^-n, b_n -> neg 2^-n, n <= 5",
                embed_outcome(report.is_ok()),
                p.len() as u64,
            );
            Ok(match report.violations.first() {
                Some(first) => f.detail(first.to_string()),
                None => f.detail(m.to_string()),
            })
        });
        let budget = SearchBudget {
            denom: 16,
            ..SearchBudget::default()
        };
        self.record("chang-fragment-search-V", v.to_string(), Outcome::Holds, |_| {
            let p = chang_fragment(5)?;
            let src = format!("search d<={}", budget.denom);
            Ok(match find_embedding(&p, &v, &budget)? {
                SearchOutcome::Found(m) => {
                    let ok = check_embedding(&m, &p, &v)?.is_ok();
                    Finding::new(src, embed_outcome(ok), p.len() as u64).detail(m.to_string())
                }
                SearchOutcome::NotFoundUpToBudget { nodes, .. } => {
                    Finding::new(src, Outcome::Fails, p.len() as u64).detail(format!("not found after {nodes} nodes"))
                }
            })
        });
        self.record("mv-fragment-not-into-V", v.to_string(), Outcome::Fails, |_| {
            let luk = chain("LukStd");
            let seed = [0, 2, 3, 5].map(|n| ChainElement::rat(n, 5));
            let closed = close_under_neg_oplus(&luk, &seed, 64)?;
            let p = partial_subalgebra(&luk, &closed)?;
            let src = format!("search d<={}", budget.denom);
            let carrier: Vec<String> = p.carrier().iter().map(|x| x.to_string()).collect();
            Ok(match find_embedding(&p, &v, &budget)? {
                SearchOutcome::Found(m) => Finding::new(src, Outcome::Holds, p.len() as u64).detail(m.to_string()),
                SearchOutcome::NotFoundUpToBudget { nodes, exhausted, .. } => {
                    Finding::new(src, Outcome::Fails, p.len() as u64)
                        .detail(format!(
                            "{{{}}} of LukStd: no map after {nodes} nodes",
                            carrier.join(", ")
                        ))
                        .require(exhausted, "search ran to completion")
                }
            })
        });
        let targets: Vec<&str> = LAW_CHAINS.iter().copied().filter(|t| *t != "Canc").collect();
        self.record("boolean-embeds", "bounded chains", Outcome::Holds, |_| {
            let g2 = chain("G(2)");
            let p = partial_subalgebra(&g2, &g2.carrier().expect("finite"))?;
            let mut missing = Vec::new();
            for t in &targets {
                let t = chain(t);
                let found = match find_embedding(&p, &t, &budget)? {
                    SearchOutcome::Found(m) => check_embedding(&m, &p, &t)?.is_ok(),
                    SearchOutcome::NotFoundUpToBudget { .. } => false,
                };
                if !found {
                    missing.push(t.to_string());
                }
            }
            let f = Finding::new("G(2) carrier", embed_outcome(missing.is_empty()), targets.len() as u64);
            Ok(if missing.is_empty() {
                f.detail(targets.join(", "))
            } else {
                f.detail(format!("no map into {}", missing.join(", ")))
            })
        });
    }
}

fn embed_outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

fn verdict_word(v: &Verdict) -> &'static str {
    if v.holds() {
        "holds"
    } else {
        "fails"
    }
}

fn ord_word(o: Order) -> String {
    match o {
        Order::Finite(n) => n.to_string(),
        Order::Infinite => "inf".into(),
        Order::InfiniteUpTo(c) => format!(">{c}"),
    }
}

/// Runs every claim. Failures are data: a claim whose verdict differs from
/// its expectation is reported with `passed: false`.
pub fn verify_claims_suite(config: &Config) -> SuiteReport {
    let mut r = Runner {
        config,
        records: Vec::new(),
    };
    r.bl_laws();
    r.uplus_claims();
    r.cha_claims();
    r.axiom_claims();
    r.perfect_claims();
    r.embedding_claims();
    SuiteReport { records: r.records }
}
