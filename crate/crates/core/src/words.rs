//! Words over the generating alphabets `{x, s_1, ..., s_{n-1}}` and
//! `{t, s_1, ..., s_{n-1}}`, the named word families built from them, and
//! the ground relation lists consumed by the enumeration engine.
//!
//! Degree validity is only checked when a word is evaluated, so builders here
//! are degree-free except where a degree is part of the definition.

use std::fmt;
use std::str::FromStr;

use crate::blockbij::BlockBijection;
use crate::error::{Error, Result};

/// Shortlex order is the derived order: `x < t < s_1 < s_2 < ...`.
/// `x` and `t` never share an alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    T,
    S(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X => f.write_str("x"),
            Letter::T => f.write_str("t"),
            Letter::S(i) => write!(f, "s{i}"),
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn s(indices: &[usize]) -> Self {
        Word(indices.iter().map(|&i| Letter::S(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn rev(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Shortlex comparison: length first, then letters.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Concatenates any number of words.
#[macro_export]
macro_rules! cat {
    ($($w:expr),* $(,)?) => {{
        let mut out = $crate::words::Word::empty();
        $( out = out.concat(&$w); )*
        out
    }};
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace-separated tokens: `x`, `t`, `s<i>`, `1`, or the macros
    /// `sigma`, `l<i>`, `y<j>`, `e<i>`.
    fn from_str(s: &str) -> Result<Word> {
        let mut out = Word::empty();
        for tok in s.split_whitespace() {
            let index = |prefix: &str| -> Result<usize> {
                tok[prefix.len()..]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad token `{tok}`")))
            };
            let piece = match tok {
                "1" => Word::empty(),
                "x" => Word::letter(Letter::X),
                "t" => Word::letter(Letter::T),
                "sigma" => sigma_word(),
                _ if tok.starts_with('s') => {
                    let i = index("s")?;
                    if i == 0 {
                        return Err(Error::Parse(format!("bad token `{tok}`")));
                    }
                    Word::letter(Letter::S(i))
                }
                _ if tok.starts_with('l') => l_word(index("l")?)?,
                _ if tok.starts_with('y') => y_word(index("y")?)?,
                _ if tok.starts_with('e') => e_i_word(index("e")?)?,
                _ => return Err(Error::Parse(format!("unknown token `{tok}`"))),
            };
            out = out.concat(&piece);
        }
        Ok(out)
    }
}

/// Coxeter exponent: 1 on the diagonal, 3 for neighbours, 2 otherwise.
pub fn m_exp(i: usize, j: usize) -> Result<usize> {
    for k in [i, j] {
        if k == 0 {
            return Err(Error::IndexOutOfRange {
                index: k,
                lo: 1,
                hi: usize::MAX,
            });
        }
    }
    Ok(match i.abs_diff(j) {
        0 => 1,
        1 => 3,
        _ => 2,
    })
}

/// `s_2 s_3 s_1 s_2`.
pub fn sigma_word() -> Word {
    Word::s(&[2, 3, 1, 2])
}

/// `l_2 = x s_2 s_1`, `l_{i+1} = s_{i+1} l_i s_{i+1} s_i`.
pub fn l_word(i: usize) -> Result<Word> {
    if i < 2 {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 2,
            hi: usize::MAX,
        });
    }
    let mut w = Word(vec![Letter::X, Letter::S(2), Letter::S(1)]);
    for k in 2..i {
        w = cat!(Word::s(&[k + 1]), w, Word::s(&[k + 1, k]));
    }
    Ok(w)
}

/// `y_3 = x`, `y_{i+1} = l_i y_i s_i`.
pub fn y_word(j: usize) -> Result<Word> {
    if j < 3 {
        return Err(Error::IndexOutOfRange {
            index: j,
            lo: 3,
            hi: usize::MAX,
        });
    }
    let mut w = Word::letter(Letter::X);
    for i in 3..j {
        w = cat!(l_word(i)?, w, Word::s(&[i]));
    }
    Ok(w)
}

/// `s_2^k s_3^k s_4^k s_1^l s_2^l s_3^l`, where `s_i^k` is `s_i` when `i <= k`
/// and empty otherwise.
pub fn pi_word(k: usize, l: usize) -> Word {
    let pick = |idx: &[usize], bound: usize| -> Vec<Letter> {
        idx.iter()
            .filter(|&&i| i <= bound)
            .map(|&i| Letter::S(i))
            .collect()
    };
    let mut letters = pick(&[2, 3, 4], k);
    letters.extend(pick(&[1, 2, 3], l));
    Word(letters)
}

/// `g⁻¹ x x g` with `g = (s_2 ... s_i)(s_1 ... s_{i-1})`; `e_1 = x x`.
pub fn e_i_word(i: usize) -> Result<Word> {
    if i == 0 {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: usize::MAX,
        });
    }
    let g: Vec<usize> = (2..=i).chain(1..i).collect();
    let g = Word::s(&g);
    Ok(cat!(g.rev(), Word(vec![Letter::X, Letter::X]), g))
}

/// `t ↦ x x`, `s_i ↦ s_i`.
pub fn theta_subst(w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &l in w.letters() {
        match l {
            Letter::T => out.extend([Letter::X, Letter::X]),
            other => out.push(other),
        }
    }
    Word(out)
}

/// Image of one degree-`(n-1)` letter in the local submonoid at degree `n`:
/// `x ↦ s_3 x σ x s_3`, `s_1 ↦ x`, `s_j ↦ x x s_{j+1}`.
pub fn psi_letter(l: Letter) -> Word {
    match l {
        Letter::X => cat!(
            Word::s(&[3]),
            Word::letter(Letter::X),
            sigma_word(),
            Word::letter(Letter::X),
            Word::s(&[3])
        ),
        Letter::S(1) => Word::letter(Letter::X),
        Letter::S(j) => Word(vec![Letter::X, Letter::X, Letter::S(j + 1)]),
        Letter::T => Word::letter(Letter::T),
    }
}

/// Substitutes [`psi_letter`] into a word valid at degree `n - 1`.
pub fn psi_subst(w: &Word, n: usize) -> Result<Word> {
    if n < 4 {
        return Err(Error::DegreeTooSmall { degree: n, min: 4 });
    }
    let mut out = Word::empty();
    for &l in w.letters() {
        match l {
            Letter::S(j) if j == 0 || j >= n - 1 => {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    lo: 1,
                    hi: n - 2,
                })
            }
            Letter::T => return Err(Error::Parse("`t` is not a letter of this alphabet".into())),
            _ => {}
        }
        out = out.concat(&psi_letter(l));
    }
    Ok(out)
}

/// Image of a letter: `x ↦ gen_x`, `t ↦ epsilon`, `s_i ↦ gen_s`.
pub fn letter_image(l: Letter, n: usize) -> Result<BlockBijection> {
    match l {
        Letter::X => BlockBijection::gen_x(n),
        Letter::T => BlockBijection::epsilon(n),
        Letter::S(i) => BlockBijection::gen_s(n, i),
    }
}

/// Evaluates a word left to right; the empty word maps to the identity.
pub fn phi_eval(w: &Word, n: usize) -> Result<BlockBijection> {
    let mut cache: Vec<(Letter, BlockBijection)> = Vec::new();
    let mut acc = BlockBijection::identity(n);
    for &l in w.letters() {
        let img = match cache.iter().find(|(c, _)| *c == l) {
            Some((_, img)) => img.clone(),
            None => {
                let img = letter_image(l, n)?;
                cache.push((l, img.clone()));
                img
            }
        };
        acc = acc.compose(&img)?;
    }
    Ok(acc)
}

/// A ground relation with a label naming its family and instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    fn new(label: impl Into<String>, lhs: Word, rhs: Word) -> Self {
        Self {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.label, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub degree: usize,
    pub alphabet: Vec<Letter>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn letter_index(&self, l: Letter) -> Option<usize> {
        self.alphabet.iter().position(|&a| a == l)
    }

    /// Relations translated to alphabet indices.
    pub fn indexed_relations(&self) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
        let index = |w: &Word| -> Result<Vec<usize>> {
            w.letters()
                .iter()
                .map(|&l| {
                    self.letter_index(l)
                        .ok_or_else(|| Error::Parse(format!("letter {l} not in alphabet")))
                })
                .collect()
        };
        self.relations
            .iter()
            .map(|r| Ok((index(&r.lhs)?, index(&r.rhs)?)))
            .collect()
    }
}

/// A chain `w_0 = w_1 = ... = w_k` as consecutive pairs.
fn chain(label: &str, words: &[Word], out: &mut Vec<Relation>) {
    for (i, pair) in words.windows(2).enumerate() {
        out.push(Relation::new(
            format!("{label}[{}]", i + 1),
            pair[0].clone(),
            pair[1].clone(),
        ));
    }
}

fn coxeter_relations(n: usize, out: &mut Vec<Relation>) {
    for i in 1..n {
        for j in i..n {
            let m = m_exp(i, j).expect("indices start at 1");
            out.push(Relation::new(
                format!("R1({i},{j})"),
                Word::s(&[i, j]).pow(m),
                Word::empty(),
            ));
        }
    }
}

fn s_alphabet(first: Option<Letter>, n: usize) -> Vec<Letter> {
    first.into_iter().chain((1..n).map(Letter::S)).collect()
}

/// Relations R1–R7 at degree `n`, omitting those that mention an absent `s_i`.
pub fn relations_r(n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { degree: n, min: 3 });
    }
    let x = Word::letter(Letter::X);
    let xx = x.pow(2);
    let s = |i: usize| Word::s(&[i]);
    let mut rels = Vec::new();
    coxeter_relations(n, &mut rels);
    rels.push(Relation::new("R2", x.pow(3), x.clone()));
    chain("R3", &[cat!(x, s(1)), cat!(s(1), x), x.clone()], &mut rels);
    chain(
        "R4",
        &[
            cat!(x, s(2), x),
            cat!(x, s(2), x, s(2)),
            cat!(s(2), x, s(2), x),
            cat!(x, s(2), xx),
            cat!(xx, s(2), x),
        ],
        &mut rels,
    );
    if n >= 4 {
        let sg = sigma_word();
        chain(
            "R5",
            &[
                cat!(xx, sg, xx, sg),
                cat!(sg, xx, sg, xx),
                cat!(x, Word::s(&[2, 3, 2]), x),
            ],
            &mut rels,
        );
    }
    for i in 3..n {
        let y = y_word(i)?;
        rels.push(Relation::new(
            format!("R6({i})"),
            cat!(y, s(i), y),
            cat!(s(i), y, s(i)),
        ));
    }
    for i in 4..n {
        rels.push(Relation::new(
            format!("R7({i})"),
            cat!(x, s(i)),
            cat!(s(i), x),
        ));
    }
    Ok(Presentation {
        degree: n,
        alphabet: s_alphabet(Some(Letter::X), n),
        relations: rels,
    })
}

/// Relations F1–F6 for the factorizable part at degree `n`.
pub fn relations_f(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let t = Word::letter(Letter::T);
    let s = |i: usize| Word::s(&[i]);
    let mut rels = Vec::new();
    coxeter_relations(n, &mut rels);
    for r in &mut rels {
        r.label = r.label.replacen('R', "F", 1);
    }
    rels.push(Relation::new("F2", t.pow(2), t.clone()));
    chain("F3", &[cat!(t, s(1)), cat!(s(1), t), t.clone()], &mut rels);
    for i in 3..n {
        rels.push(Relation::new(
            format!("F4({i})"),
            cat!(t, s(i)),
            cat!(s(i), t),
        ));
    }
    if n >= 3 {
        rels.push(Relation::new(
            "F5",
            cat!(t, s(2), t, s(2)),
            cat!(s(2), t, s(2), t),
        ));
    }
    if n >= 4 {
        let sg = sigma_word();
        rels.push(Relation::new("F6", cat!(t, sg, t, sg), cat!(sg, t, sg, t)));
    }
    Ok(Presentation {
        degree: n,
        alphabet: s_alphabet(Some(Letter::T), n),
        relations: rels,
    })
}

/// The Coxeter relations alone, over `{s_1, ..., s_{n-1}}`.
pub fn relations_moore(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let mut rels = Vec::new();
    coxeter_relations(n, &mut rels);
    Ok(Presentation {
        degree: n,
        alphabet: s_alphabet(None, n),
        relations: rels,
    })
}

/// The 25 words listed for degree 3: six units, eighteen products
/// `{1, s_2, s_1 s_2}{x, x^2}{1, s_2, s_2 s_1}`, and `x s_2 x`.
pub fn normal_forms_3() -> Vec<Word> {
    let x = Word::letter(Letter::X);
    let mut out: Vec<Word> = [&[][..], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]]
        .iter()
        .map(|s| Word::s(s))
        .collect();
    let left = [Word::empty(), Word::s(&[2]), Word::s(&[1, 2])];
    let mid = [x.clone(), x.pow(2)];
    let right = [Word::empty(), Word::s(&[2]), Word::s(&[2, 1])];
    for a in &left {
        for m in &mid {
            for b in &right {
                out.push(cat!(a, m, b));
            }
        }
    }
    out.push(cat!(x, Word::s(&[2]), x));
    out
}

/// Column and row classes of the first proof table.
pub const TABLE1_K_CLASSES: [&str; 4] = ["1", "2", "3", ">=4"];
pub const TABLE1_L_CLASSES: [&str; 4] = ["0", "1", "2", ">=3"];

/// `x (x^2)^π x = x π⁻¹ x² π x` for `π = pi_word(k, l)`.
pub fn table1_lhs(k: usize, l: usize) -> Word {
    let pi = pi_word(k, l);
    let x = Word::letter(Letter::X);
    cat!(x, pi.rev(), x.pow(2), pi, x)
}

/// The tabulated word over `{x^2, s_i}` equal to [`table1_lhs`].
pub fn table1_expression(k: usize, l: usize) -> Word {
    let xx = Word::letter(Letter::X).pow(2);
    let sg = sigma_word();
    let a = xx.clone();
    let b = cat!(xx, Word::s(&[2]), xx);
    let c = cat!(xx, sg, xx, sg);
    let d = cat!(xx, Word::s(&[2, 3, 2]), xx);
    let e = cat!(Word::s(&[4]), c, Word::s(&[4]));
    let f = cat!(Word::s(&[4]), d, Word::s(&[4]));
    let g = cat!(Word::s(&[3, 4]), c, Word::s(&[4, 3]));
    let row = k.clamp(1, 4);
    let col = l.min(3);
    match (row, col) {
        (1, 0) | (1, 1) => a,
        (1, 2) | (2, 0) | (2, 1) | (2, 2) => b,
        (1, 3) | (2, 3) | (3, 0) | (3, 1) => c,
        (3, 2) | (3, 3) => d,
        (4, 0) | (4, 1) => e,
        (4, 2) => f,
        _ => g,
    }
}

pub const TABLE2_I_CLASSES: [&str; 3] = ["0", "1", ">=2"];
pub const TABLE2_J_CLASSES: [&str; 3] = ["1", "2", ">=3"];

/// `s_2^j s_3^j s_1^i s_2^i`.
pub fn table2_pi(i: usize, j: usize) -> Word {
    let mut letters: Vec<Letter> = [2, 3]
        .iter()
        .filter(|&&a| a <= j)
        .map(|&a| Letter::S(a))
        .collect();
    letters.extend([1, 2].iter().filter(|&&a| a <= i).map(|&a| Letter::S(a)));
    Word(letters)
}

/// `e π e` with `e = x^2`.
pub fn table2_lhs(i: usize, j: usize) -> Word {
    let e = Word::letter(Letter::X).pow(2);
    cat!(e, table2_pi(i, j), e)
}

/// The tabulated expression over `{X, S_1, S_2}` as a degree-`(n-1)` word
/// (to be expanded with [`psi_subst`]); `None` marks the cell whose value is `e` itself.
pub fn table2_expression(i: usize, j: usize) -> Option<Word> {
    let x = Letter::X;
    let s = Letter::S;
    match (i.min(2), j.clamp(1, 3)) {
        (0, 1) | (1, 1) => None,
        (0, 2) | (1, 2) | (2, 1) | (2, 2) => Some(Word(vec![x, x])),
        (0, 3) | (1, 3) => Some(Word(vec![x, x, s(2)])),
        _ => Some(Word(vec![s(1), s(2), x, s(2), s(1)])),
    }
}

/// [`table2_expression`] expanded to a word at degree `n`.
pub fn table2_rhs(i: usize, j: usize, n: usize) -> Result<Word> {
    match table2_expression(i, j) {
        None => Ok(Word::letter(Letter::X).pow(2)),
        Some(w) => psi_subst(&w, n),
    }
}
