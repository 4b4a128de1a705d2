//! One PASS/FAIL line per acceptance criterion. Expected values and runtime
//! budgets are pinned here; the process exits non-zero if any line fails.

use std::time::{Duration, Instant};

use instar::engine::green::{factorizable_part, idempotents, set_product, units};
use instar::engine::verify;
use instar::engine::{
    cardinality_oracle, enumerate_instar, todd_coxeter, Report, DEFAULT_CLASS_CAP,
};
use instar::words::{relations_f, relations_moore, relations_r};

const SIZES: [(usize, usize); 4] = [(2, 3), (3, 25), (4, 339), (5, 6721)];
const BELL: [(usize, usize); 3] = [(3, 5), (4, 15), (5, 52)];
const FACTORIAL: [(usize, usize); 3] = [(3, 6), (4, 24), (5, 120)];
const F3_SIZE: usize = 16;
const LADDER_BUDGET: Duration = Duration::from_secs(10);
const SMALL_TC_BUDGET: Duration = Duration::from_secs(5);
const LARGE_TC_BUDGET: Duration = Duration::from_secs(120);
const INVERSE_SAMPLES: usize = 10_000;
const SYMMETRIC_WORD_LEN: usize = 6;

struct Outcome {
    ok: bool,
    detail: String,
    problems: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            ok: true,
            detail: String::new(),
            problems: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.problems.push(what.into());
        }
    }

    fn absorb(&mut self, r: instar::Result<Report>, what: &str) {
        match r {
            Ok(r) => {
                for f in r.failures() {
                    self.require(false, format!("{what}: {f}"));
                }
                self.require(r.num_checks() > 0, format!("{what}: no checks ran"));
            }
            Err(e) => self.require(false, format!("{what}: {e}")),
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn ladder() -> Outcome {
    let mut o = Outcome::new();
    let mut got = Vec::new();
    let (_, dt) = timed(|| {
        for (n, want) in SIZES {
            match enumerate_instar(n) {
                Ok(m) => {
                    got.push(m.len().to_string());
                    o.require(m.len() == want, format!("n={n}: {} != {want}", m.len()));
                    let oracle = cardinality_oracle(n);
                    o.require(m.len() as u64 == oracle, format!("n={n}: oracle {oracle}"));
                }
                Err(e) => o.require(false, format!("n={n}: {e}")),
            }
        }
    });
    o.require(dt <= LADDER_BUDGET, format!("took {dt:?}"));
    o.detail = format!("sizes={} time={dt:.2?}", got.join(","));
    o
}

fn presentation() -> Outcome {
    let mut o = Outcome::new();
    let mut parts = Vec::new();
    for (n, want) in &SIZES[1..] {
        let pres = relations_r(*n).unwrap();
        let (t, dt) = timed(|| todd_coxeter(&pres, DEFAULT_CLASS_CAP));
        let budget = if *n <= 4 {
            SMALL_TC_BUDGET
        } else {
            LARGE_TC_BUDGET
        };
        match t {
            Ok(t) => {
                parts.push(format!("n={n}:{}({dt:.2?})", t.size()));
                o.require(t.size() == *want, format!("n={n}: {} != {want}", t.size()));
            }
            Err(e) => o.require(false, format!("n={n}: {e}")),
        }
        o.require(dt <= budget, format!("n={n}: took {dt:?}"));
        // the isomorphism itself, not only the count
        o.absorb(
            verify::check_presentation(*n, DEFAULT_CLASS_CAP),
            &format!("n={n}"),
        );
    }
    o.detail = parts.join(" ");
    o
}

fn relations() -> Outcome {
    let mut o = Outcome::new();
    let mut lines = 0;
    for n in 2..=6 {
        let r = verify::verify_relations(n);
        if let Ok(r) = &r {
            lines += r.num_checks();
        }
        o.absorb(r, &format!("n={n}"));
    }
    o.detail = format!("degrees=2..6 checks={lines}");
    o
}

fn moore() -> Outcome {
    let mut o = Outcome::new();
    let mut got = Vec::new();
    for (n, want) in FACTORIAL {
        match todd_coxeter(&relations_moore(n).unwrap(), DEFAULT_CLASS_CAP) {
            Ok(t) => {
                got.push(t.size().to_string());
                o.require(t.size() == want, format!("n={n}: {} != {want}", t.size()));
            }
            Err(e) => o.require(false, format!("n={n}: {e}")),
        }
    }
    o.detail = format!("sizes={}", got.join(","));
    o
}

fn factorizable() -> Outcome {
    let mut o = Outcome::new();
    let mut sizes = Vec::new();
    for n in 3..=5 {
        let m = enumerate_instar(n).unwrap();
        let els = m.elements().unwrap();
        let uniform: std::collections::BTreeSet<usize> =
            (0..m.len()).filter(|&i| els[i].is_uniform()).collect();
        let eg = factorizable_part(&m);
        let ge = set_product(&m, &units(&m), &idempotents(&m));
        o.require(eg == uniform, format!("n={n}: E.G differs from uniform"));
        o.require(ge == uniform, format!("n={n}: G.E differs from uniform"));
        sizes.push(uniform.len().to_string());
        if n == 3 {
            o.require(uniform.len() == F3_SIZE, format!("|F_3|={}", uniform.len()));
        }
    }
    let tc = todd_coxeter(&relations_f(3).unwrap(), DEFAULT_CLASS_CAP).map(|t| t.size());
    o.require(tc == Ok(F3_SIZE), format!("presented F_3: {tc:?}"));
    o.detail = format!(
        "uniform={} presented_f3={}",
        sizes.join(","),
        tc.unwrap_or(0)
    );
    o
}

fn inverse_structure() -> Outcome {
    let mut o = Outcome::new();
    for (n, want) in BELL {
        let m = enumerate_instar(n).unwrap();
        let e = idempotents(&m).len();
        o.require(e == want, format!("n={n}: {e} idempotents, want {want}"));
        let g = units(&m).len();
        let f = FACTORIAL.iter().find(|(k, _)| *k == n).unwrap().1;
        o.require(g == f, format!("n={n}: {g} units, want {f}"));
        o.absorb(
            verify::verify_inverse_structure(n, INVERSE_SAMPLES, DEFAULT_CLASS_CAP),
            &format!("n={n}"),
        );
    }
    o.detail = format!("exhaustive n=3,4 sampled n=5 pairs={INVERSE_SAMPLES}");
    o
}

fn local() -> Outcome {
    let mut o = Outcome::new();
    for n in [4, 5] {
        o.absorb(verify::verify_local_iso(n), &format!("n={n}"));
    }
    o.detail = "n=4,5".into();
    o
}

fn tables() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(verify::verify_table1(5), "table1 n=5");
    o.absorb(verify::verify_table2(4), "table2 n=4");
    o.absorb(verify::verify_table2(5), "table2 n=5");
    o.detail = "table1 n=5 classes=16, table2 n=4,5 classes=9".into();
    o
}

fn properties() -> Outcome {
    let mut o = Outcome::new();
    for n in [3, 4] {
        o.absorb(
            verify::verify_prop_conditions(n),
            &format!("conditions n={n}"),
        );
        o.absorb(verify::verify_property_p(n), &format!("property n={n}"));
    }
    o.absorb(
        verify::verify_symmetric_words(4, SYMMETRIC_WORD_LEN),
        "words n=4",
    );
    o.detail = format!("n=3,4 words<={SYMMETRIC_WORD_LEN}");
    o
}

fn normal_forms() -> Outcome {
    let mut o = Outcome::new();
    o.absorb(verify::verify_normal_forms_3(), "n=3");
    o.detail = "n=3 words=25".into();
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("cardinality_ladder", ladder),
        ("presentation", presentation),
        ("relations", relations),
        ("moore", moore),
        ("factorizable_part", factorizable),
        ("inverse_structure", inverse_structure),
        ("local_submonoid", local),
        ("proof_tables", tables),
        ("property_suites", properties),
        ("normal_forms", normal_forms),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {} {name} {} {status}", i + 1, o.detail);
        for p in &o.problems {
            println!("  # {p}");
        }
        failed += usize::from(!o.ok);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
