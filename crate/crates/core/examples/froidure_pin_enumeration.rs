//! Enumerate the whole monoid from its generators and compare with an
//! independent count.

use instar::engine::{
    cardinality_oracle, enumerate_instar, enumerate_letters, factorizable_letters,
};

fn main() -> instar::Result<()> {
    for n in 1..=5 {
        let m = enumerate_instar(n)?;
        let f = enumerate_letters(n, &factorizable_letters(n), 100_000)?;
        println!(
            "n={n}: {} elements (oracle {}), {} uniform, longest word {}",
            m.len(),
            cardinality_oracle(n),
            f.len(),
            m.rep_word(m.len() - 1)
        );
    }
    let m = enumerate_instar(3)?;
    for i in 0..m.len() {
        println!(
            "{:>12}  {}",
            m.rep_word(i).to_string(),
            m.element(i).unwrap()
        );
    }
    Ok(())
}
