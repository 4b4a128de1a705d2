//! Verification suites. Each returns a [`Report`] with one line per check;
//! a failing check carries the first witness found.

use std::collections::{BTreeSet, HashSet};

use crate::blockbij::BlockBijection;
use crate::error::{Error, Result};
use crate::partitions::{bell, enumerate_partitions};
use crate::words::{
    letter_image, normal_forms_3, phi_eval, psi_subst, relations_f, relations_moore, relations_r,
    table1_expression, table1_lhs, table2_lhs, table2_rhs, theta_subst, Letter, Presentation, Word,
    TABLE1_K_CLASSES, TABLE1_L_CLASSES, TABLE2_I_CLASSES, TABLE2_J_CLASSES,
};

use super::green::{
    factorizable_part, idempotents, idempotents_commute, inverses_of, is_inverse_monoid,
    is_regular_monoid, sampled_inverse_violation, set_product, units,
};
use super::monoid::{
    enumerate_instar, enumerate_letters, factorizable_letters, phi_letters, DEFAULT_ELEMENT_CAP,
};
use super::report::Report;
use super::todd_coxeter::todd_coxeter;

fn need_degree(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::DegreeTooSmall { degree: n, min });
    }
    Ok(())
}

fn need_at_most(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::IndexOutOfRange {
            index: n,
            lo: 0,
            hi: max,
        });
    }
    Ok(())
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// First relation of `pres` whose sides have different images, if any.
fn relation_results(pres: &Presentation, n: usize) -> Result<Vec<(String, bool)>> {
    pres.relations
        .iter()
        .map(|r| {
            Ok((
                r.label.clone(),
                phi_eval(&r.lhs, n)? == phi_eval(&r.rhs, n)?,
            ))
        })
        .collect()
}

/// Every relation of R (if `n >= 3`) and of the factorizable presentation
/// (if `n >= 2`) holds as an equality of diagrams; F-relations also hold after
/// substituting `t ↦ x x`.
pub fn verify_relations(n: usize) -> Result<Report> {
    need_degree(n, 2)?;
    let mut report = Report::new();
    if n >= 3 {
        for (label, ok) in relation_results(&relations_r(n)?, n)? {
            report.check("relation", format!("n={n} {label}"), ok);
        }
    }
    let f = relations_f(n)?;
    for (label, ok) in relation_results(&f, n)? {
        report.check("relation", format!("n={n} {label}"), ok);
    }
    if n >= 3 {
        for r in &f.relations {
            let ok = phi_eval(&theta_subst(&r.lhs), n)? == phi_eval(&theta_subst(&r.rhs), n)?;
            report.check("theta_transport", format!("n={n} {}", r.label), ok);
        }
    }
    Ok(report)
}

/// Machine-checks that the monoid presented by R has the same size as the
/// concrete monoid and that the word evaluation map is a bijection.
pub fn check_presentation(n: usize, class_cap: usize) -> Result<Report> {
    need_degree(n, 3)?;
    let mut report = Report::new();
    let pres = relations_r(n)?;
    let holds = relation_results(&pres, n)?;
    let failed: Vec<_> = holds
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(l, _)| l.clone())
        .collect();
    report.check(
        "relations_hold",
        match failed.first() {
            None => format!("n={n} count={}", holds.len()),
            Some(w) => format!("n={n} count={} witness={w}", holds.len()),
        },
        failed.is_empty(),
    );
    // a raised class cap raises the concrete side's budget too
    let concrete = enumerate_letters(n, &phi_letters(n), class_cap.max(DEFAULT_ELEMENT_CAP))?;
    let table = todd_coxeter(&pres, class_cap)?;
    let sizes_agree = report.check(
        "check_presentation",
        format!("n={n} lhs={} rhs={}", table.size(), concrete.len()),
        table.size() == concrete.len(),
    );
    let moore = todd_coxeter(&relations_moore(n)?, class_cap)?;
    report.check(
        "moore",
        format!("n={n} lhs={} rhs={}", moore.size(), factorial(n)),
        moore.size() == factorial(n),
    );
    report.check(
        "table_compatible",
        format!("n={n} classes={}", table.size()),
        table.is_compatible(&pres.indexed_relations()?),
    );

    // Evaluate each class representative; the result must be injective and
    // carry the class table onto the Cayley table of the concrete monoid.
    let presented = table.to_monoid();
    let mut images = Vec::with_capacity(presented.len());
    for c in 0..presented.len() {
        images.push(
            concrete
                .evaluate(&presented.rep_word(c))
                .expect("same alphabet"),
        );
    }
    let distinct: HashSet<_> = images.iter().collect();
    let compatible = (0..presented.len()).all(|c| {
        (0..presented.num_generators())
            .all(|g| images[presented.right(c, g)] == concrete.right(images[c], g))
    });
    report.check(
        "phi_bijective",
        format!(
            "n={n} classes={} images={}",
            presented.len(),
            distinct.len()
        ),
        distinct.len() == presented.len() && distinct.len() == concrete.len() && compatible,
    );
    report.check(
        "presented_inverse",
        format!("n={n}"),
        is_inverse_monoid(&presented),
    );
    if sizes_agree && failed.is_empty() {
        report.note(format!(
            "every relation holds under the generator images, so evaluation induces a \
             homomorphism from the presented monoid onto the {} block bijections they generate",
            concrete.len()
        ));
        report.note(format!(
            "both sides are finite of size {}, so the surjection is a bijection: \
             the presentation holds at degree {n}",
            concrete.len()
        ));
    }
    Ok(report)
}

/// Inverse-monoid structure of the enumerated monoid of degree `n`.
/// Unique inverses are checked exhaustively when `n <= 4`, otherwise on
/// `samples` random pairs.
pub fn verify_inverse_structure(n: usize, samples: usize, class_cap: usize) -> Result<Report> {
    need_degree(n, 1)?;
    let mut report = Report::new();
    let m = enumerate_instar(n)?;
    let els = m.elements().expect("concrete");

    report.check("regular", format!("n={n}"), is_regular_monoid(&m));
    report.check(
        "idempotents_commute",
        format!("n={n}"),
        idempotents_commute(&m),
    );

    let idem = idempotents(&m);
    let structural: Vec<usize> = (0..m.len()).filter(|&i| els[i].is_idempotent()).collect();
    let domains: BTreeSet<_> = idem.iter().map(|&e| els[e].domain()).collect();
    report.check(
        "idempotent_count",
        format!("n={n} count={} bell={}", idem.len(), bell(n)),
        idem.len() as u64 == bell(n)
            && idem == structural
            && domains.len() == idem.len()
            && idem.iter().all(|&e| els[e].domain() == els[e].range()),
    );
    // the idempotents multiply as partitions under join
    let join_ok = idem.iter().all(|&a| {
        idem.iter().all(|&b| {
            let joined = els[a].domain().join(&els[b].domain()).expect("same size");
            els[m.product(a, b)] == BlockBijection::idempotent(&joined)
        })
    });
    report.check("idempotents_are_joins", format!("n={n}"), join_ok);

    let g = units(&m);
    let structural_units: Vec<usize> = (0..m.len()).filter(|&i| els[i].is_unit()).collect();
    report.check(
        "unit_count",
        format!("n={n} count={} factorial={}", g.len(), factorial(n)),
        g.len() == factorial(n) && g == structural_units,
    );

    let inverse_index = |a: usize| m.index_of(&els[a].inverse()).expect("closed under inverse");
    if n <= 4 {
        let bad = (0..m.len()).find(|&a| inverses_of(&m, a) != [inverse_index(a)]);
        report.check(
            "unique_inverses",
            match bad {
                None => format!("n={n} exhaustive elements={}", m.len()),
                Some(a) => format!("n={n} exhaustive witness={}", els[a]),
            },
            bad.is_none(),
        );
    } else {
        let bad = sampled_inverse_violation(&m, inverse_index, samples, 0x15);
        report.check(
            "unique_inverses",
            match bad {
                None => format!("n={n} sampled pairs={samples}"),
                Some((a, b)) => format!("n={n} sampled witness={}*{}", els[a], els[b]),
            },
            bad.is_none(),
        );
    }

    let eg = factorizable_part(&m);
    let ge = set_product(&m, &g, &idem);
    let uniform: BTreeSet<usize> = (0..m.len()).filter(|&i| els[i].is_uniform()).collect();
    report.check(
        "factorizable_part",
        format!(
            "n={n} EG={} GE={} uniform={}",
            eg.len(),
            ge.len(),
            uniform.len()
        ),
        eg == ge && eg == uniform,
    );
    if n >= 2 {
        let f = todd_coxeter(&relations_f(n)?, class_cap)?;
        report.check(
            "factorizable_presentation",
            format!("n={n} lhs={} rhs={}", f.size(), uniform.len()),
            f.size() == uniform.len(),
        );
    }
    Ok(report)
}

fn closure(gens: &[BlockBijection], n: usize) -> Result<HashSet<BlockBijection>> {
    let mut seen = HashSet::from([BlockBijection::identity(n)]);
    let mut queue: Vec<BlockBijection> = seen.iter().cloned().collect();
    while let Some(a) = queue.pop() {
        for g in gens {
            let b = a.compose(g)?;
            if seen.insert(b.clone()) {
                queue.push(b);
            }
        }
    }
    Ok(seen)
}

fn all_units(n: usize) -> Result<Vec<BlockBijection>> {
    let letters: Vec<Letter> = (1..n).map(Letter::S).collect();
    let g = enumerate_letters(n, &letters, DEFAULT_ELEMENT_CAP)?;
    Ok(g.elements().expect("concrete").to_vec())
}

/// With `z` the image of `x`: the two conditions on `z` and the units that
/// make `⟨units, z⟩` inverse, then the commuting and closure conditions on
/// the completely regular generators `units ∪ {g⁻¹ z g}`.
pub fn verify_prop_conditions(n: usize) -> Result<Report> {
    need_degree(n, 3)?;
    need_at_most(n, 5)?;
    let mut report = Report::new();
    let z = BlockBijection::gen_x(n)?;
    let zz = z.compose(&z)?;
    let group = all_units(n)?;
    let f_letters = factorizable_letters(n);
    let fact = enumerate_letters(n, &f_letters, DEFAULT_ELEMENT_CAP)?;
    let fact: HashSet<&BlockBijection> = fact.elements().expect("concrete").iter().collect();

    let mut c1_bad = None;
    let mut c2_bad = None;
    for g in &group {
        let c = zz.conjugate(g)?;
        if c1_bad.is_none() && c.compose(&zz)? != zz.compose(&c)? {
            c1_bad = Some(g.clone());
        }
        let w = z.compose(&c)?.compose(&z)?;
        if c2_bad.is_none() && !(fact.contains(&w) && w.is_uniform()) {
            c2_bad = Some(g.clone());
        }
    }
    let detail = |bad: &Option<BlockBijection>| match bad {
        None => format!("n={n} units={}", group.len()),
        Some(g) => format!("n={n} units={} witness={g}", group.len()),
    };
    report.check(
        "conjugate_idempotents_commute",
        detail(&c1_bad),
        c1_bad.is_none(),
    );
    report.check("sandwich_is_uniform", detail(&c2_bad), c2_bad.is_none());

    // generators: units and the conjugates of z
    let mut gens: Vec<BlockBijection> = group.clone();
    let mut seen: HashSet<BlockBijection> = group.iter().cloned().collect();
    for g in &group {
        let y = z.conjugate(g)?;
        if seen.insert(y.clone()) {
            gens.push(y);
        }
    }
    // In an inverse monoid the H-class of a is a group iff a a⁻¹ = a⁻¹ a,
    // and then a⁻¹ is the group inverse.
    let mut zero_parts = Vec::with_capacity(gens.len());
    let mut cr_ok = true;
    for a in &gens {
        let inv = a.inverse();
        let (r, l) = (a.compose(&inv)?, inv.compose(a)?);
        cr_ok &= r == l && a.compose(&inv)?.compose(a)? == *a;
        zero_parts.push(r);
    }
    report.check(
        "generators_completely_regular",
        format!("n={n} generators={}", gens.len()),
        cr_ok,
    );
    let x0: Vec<BlockBijection> = zero_parts
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let x0_closure = closure(&x0, n)?;

    let mut i_bad = None;
    for a in &x0 {
        for b in &x0 {
            if i_bad.is_none() && a.compose(b)? != b.compose(a)? {
                i_bad = Some(format!("{a}*{b}"));
            }
        }
    }
    report.check(
        "zero_parts_commute",
        match &i_bad {
            None => format!("n={n} idempotents={}", x0.len()),
            Some(w) => format!("n={n} witness={w}"),
        },
        i_bad.is_none(),
    );

    let mut ii_bad = None;
    let mut all_idempotent = true;
    for y in &gens {
        let y_inv = y.inverse();
        for e in &x0 {
            let c = y_inv.compose(e)?.compose(y)?;
            all_idempotent &= c.is_idempotent();
            if ii_bad.is_none() && !x0_closure.contains(&c) {
                ii_bad = Some(format!("{y}~{e}"));
            }
        }
    }
    report.check(
        "conjugates_in_zero_part_closure",
        match &ii_bad {
            None => format!("n={n} closure={}", x0_closure.len()),
            Some(w) => format!("n={n} witness={w}"),
        },
        ii_bad.is_none(),
    );
    report.check(
        "conjugated_zero_parts_idempotent",
        format!("n={n}"),
        all_idempotent,
    );
    report.check(
        "zero_parts_generate_all_idempotents",
        format!("n={n} closure={} bell={}", x0_closure.len(), bell(n)),
        x0_closure.len() as u64 == bell(n) && x0_closure.iter().all(|e| e.is_idempotent()),
    );
    Ok(report)
}

/// For `e = x^2` and every non-identity idempotent `f`, some unit `g` puts
/// `g⁻¹ f g` inside `e I e`.
pub fn verify_property_p(n: usize) -> Result<Report> {
    need_degree(n, 3)?;
    need_at_most(n, 5)?;
    let mut report = Report::new();
    let x = BlockBijection::gen_x(n)?;
    let e = x.compose(&x)?;
    let group = all_units(n)?;
    let mut total = 0;
    let mut witnessed = 0;
    let mut missing = None;
    for p in enumerate_partitions(n) {
        let f = BlockBijection::idempotent(&p);
        if f == BlockBijection::identity(n) {
            continue;
        }
        total += 1;
        let mut found = false;
        for g in &group {
            let fg = f.conjugate(g)?;
            if e.compose(&fg)?.compose(&e)? == fg {
                found = true;
                break;
            }
        }
        if found {
            witnessed += 1;
        } else if missing.is_none() {
            missing = Some(p);
        }
    }
    report.check(
        "property_p",
        match &missing {
            None => format!("n={n} idempotents={total} witnessed={witnessed}"),
            Some(p) => format!("n={n} idempotents={total} witnessed={witnessed} missing={p}"),
        },
        missing.is_none(),
    );
    Ok(report)
}

/// Each proof-table cell: `x (x^2)^π x` equals the tabulated word.
/// Representatives are the boundary and boundary+1 of each `>=` class.
pub fn verify_table1(n: usize) -> Result<Report> {
    need_degree(n, 5)?;
    let mut report = Report::new();
    let mut classes = BTreeSet::new();
    for k in 1..=5 {
        for l in 0..=4 {
            let class = (k.min(4), l.min(3));
            classes.insert(class);
            let lhs = phi_eval(&table1_lhs(k, l), n)?;
            let rhs = phi_eval(&table1_expression(k, l), n)?;
            report.check(
                "table1",
                format!(
                    "n={n} k={k} l={l} class=({},{})",
                    TABLE1_K_CLASSES[class.0 - 1],
                    TABLE1_L_CLASSES[class.1]
                ),
                lhs == rhs && lhs.is_uniform(),
            );
        }
    }
    report.check(
        "table1_classes",
        format!("n={n} covered={}", classes.len()),
        classes.len() == 16,
    );
    Ok(report)
}

/// Each cell: `e π e` equals the tabulated word over `{X, S_1, S_2}` expanded to degree `n`.
pub fn verify_table2(n: usize) -> Result<Report> {
    need_degree(n, 4)?;
    let mut report = Report::new();
    let mut classes = BTreeSet::new();
    for i in 0..=3 {
        for j in 1..=4 {
            let class = (i.min(2), j.min(3));
            classes.insert(class);
            let lhs = phi_eval(&table2_lhs(i, j), n)?;
            let rhs = phi_eval(&table2_rhs(i, j, n)?, n)?;
            report.check(
                "table2",
                format!(
                    "n={n} i={i} j={j} class=({},{})",
                    TABLE2_I_CLASSES[class.0],
                    TABLE2_J_CLASSES[class.1 - 1]
                ),
                lhs == rhs && lhs.in_local_submonoid(),
            );
        }
    }
    report.check(
        "table2_classes",
        format!("n={n} covered={}", classes.len()),
        classes.len() == 9,
    );
    Ok(report)
}

/// Collapsing `1 ≡ 2` is a composition-preserving bijection from the local
/// submonoid at `epsilon` onto degree `n - 1`, and it carries each substituted
/// generator word back to the generator image one degree down.
pub fn verify_local_iso(n: usize) -> Result<Report> {
    need_degree(n, 4)?;
    let mut report = Report::new();
    let big = enumerate_instar(n)?;
    let small = enumerate_instar(n - 1)?;
    let eps = BlockBijection::epsilon(n)?;
    let mut local = Vec::new();
    for b in big.elements().expect("concrete") {
        if eps.compose(b)?.compose(&eps)? == *b {
            local.push(b.clone());
        }
    }
    let images: Vec<BlockBijection> = local
        .iter()
        .map(BlockBijection::upsilon)
        .collect::<Result<_>>()?;
    let distinct: HashSet<&BlockBijection> = images.iter().collect();
    let onto = images.iter().all(|b| small.index_of(b).is_some());
    report.check(
        "local_size",
        format!("n={n} local={} smaller={}", local.len(), small.len()),
        local.len() == small.len(),
    );
    report.check(
        "upsilon_bijective",
        format!("n={n} images={}", distinct.len()),
        distinct.len() == local.len() && onto && distinct.len() == small.len(),
    );
    let mut hom_bad = None;
    'outer: for (a, ua) in local.iter().zip(&images) {
        for (b, ub) in local.iter().zip(&images) {
            if a.compose(b)?.upsilon()? != ua.compose(ub)? {
                hom_bad = Some(format!("{a}*{b}"));
                break 'outer;
            }
        }
    }
    report.check(
        "upsilon_homomorphism",
        match &hom_bad {
            None => format!("n={n} pairs={}", local.len() * local.len()),
            Some(w) => format!("n={n} witness={w}"),
        },
        hom_bad.is_none(),
    );
    let letters: Vec<Letter> = std::iter::once(Letter::X)
        .chain((1..n - 1).map(Letter::S))
        .collect();
    for c in letters {
        let lifted = phi_eval(&psi_subst(&Word::letter(c), n)?, n)?;
        let ok = lifted.in_local_submonoid() && lifted.upsilon()? == letter_image(c, n - 1)?;
        report.check("generator_agreement", format!("n={n} letter={c}"), ok);
    }
    Ok(report)
}

/// The 25 listed words at degree 3 have distinct images, are closed under
/// right multiplication by generators, and `x s_2 x` is a zero.
pub fn verify_normal_forms_3() -> Result<Report> {
    let n = 3;
    let mut report = Report::new();
    let words = normal_forms_3();
    let images: Vec<BlockBijection> = words
        .iter()
        .map(|w| phi_eval(w, n))
        .collect::<Result<_>>()?;
    let set: HashSet<&BlockBijection> = images.iter().collect();
    report.check(
        "normal_forms_distinct",
        format!("n=3 words={} images={}", words.len(), set.len()),
        set.len() == 25 && words.len() == 25,
    );
    let gens: Vec<BlockBijection> = [Letter::X, Letter::S(1), Letter::S(2)]
        .iter()
        .map(|&l| letter_image(l, n))
        .collect::<Result<_>>()?;
    let mut closed_bad = None;
    for (w, img) in words.iter().zip(&images) {
        for (g, gi) in ["x", "s1", "s2"].iter().zip(&gens) {
            if closed_bad.is_none() && !set.contains(&img.compose(gi)?) {
                closed_bad = Some(format!("{w}*{g}"));
            }
        }
    }
    report.check(
        "normal_forms_right_closed",
        match &closed_bad {
            None => "n=3".to_string(),
            Some(w) => format!("n=3 missing={w}"),
        },
        closed_bad.is_none(),
    );
    let zero = phi_eval(&"x s2 x".parse()?, n)?;
    let mut absorbs = true;
    for g in &gens {
        absorbs &= zero.compose(g)? == zero && g.compose(&zero)? == zero;
    }
    report.check("normal_forms_zero", "n=3", absorbs);
    let full = super::monoid::cardinality_oracle(3);
    report.check(
        "normal_forms_cover",
        format!("n=3 images={} oracle={full}", set.len()),
        set.len() as u64 == full,
    );
    Ok(report)
}

/// Every word over `{x, s_i}` up to `max_len`: the reverse evaluates to the
/// inverse; symmetric words satisfy `w = w^3` with `w^2` idempotent.
pub fn verify_symmetric_words(n: usize, max_len: usize) -> Result<Report> {
    need_degree(n, 3)?;
    need_at_most(n, 5)?;
    need_at_most(max_len, 8)?;
    let letters: Vec<Letter> = std::iter::once(Letter::X)
        .chain((1..n).map(Letter::S))
        .collect();
    let gens: Vec<BlockBijection> = letters
        .iter()
        .map(|&l| letter_image(l, n))
        .collect::<Result<_>>()?;

    struct Walk<'a> {
        gens: &'a [BlockBijection],
        letters: &'a [Letter],
        max_len: usize,
        word: Vec<Letter>,
        words: usize,
        symmetric: usize,
        rev_bad: Option<Word>,
        cube_bad: Option<Word>,
    }

    impl Walk<'_> {
        fn visit(&mut self, fwd: &BlockBijection, rev: &BlockBijection) -> Result<()> {
            self.words += 1;
            if self.rev_bad.is_none() && *rev != fwd.inverse() {
                self.rev_bad = Some(Word(self.word.clone()));
            }
            if Word(self.word.clone()).is_symmetric() {
                self.symmetric += 1;
                let sq = fwd.compose(fwd)?;
                let ok = sq.compose(fwd)? == *fwd && sq.compose(&sq)? == sq;
                if !ok && self.cube_bad.is_none() {
                    self.cube_bad = Some(Word(self.word.clone()));
                }
            }
            if self.word.len() < self.max_len {
                for (i, g) in self.gens.iter().enumerate() {
                    self.word.push(self.letters[i]);
                    self.visit(&fwd.compose(g)?, &g.compose(rev)?)?;
                    self.word.pop();
                }
            }
            Ok(())
        }
    }

    let id = BlockBijection::identity(n);
    let mut walk = Walk {
        gens: &gens,
        letters: &letters,
        max_len,
        word: Vec::new(),
        words: 0,
        symmetric: 0,
        rev_bad: None,
        cube_bad: None,
    };
    walk.visit(&id, &id)?;
    let mut report = Report::new();
    report.check(
        "reverse_is_inverse",
        match &walk.rev_bad {
            None => format!("n={n} max_len={max_len} words={}", walk.words),
            Some(w) => format!("n={n} witness={w}"),
        },
        walk.rev_bad.is_none(),
    );
    report.check(
        "symmetric_cube",
        match &walk.cube_bad {
            None => format!("n={n} max_len={max_len} symmetric={}", walk.symmetric),
            Some(w) => format!("n={n} witness={w}"),
        },
        walk.cube_bad.is_none(),
    );
    Ok(report)
}
