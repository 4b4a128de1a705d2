//! The elements fixed on both sides by epsilon form a copy of the monoid one
//! degree down; collapsing points 1 and 2 is the isomorphism.

use std::collections::HashSet;

use instar::engine::enumerate_instar;
use instar::BlockBijection;

fn main() -> instar::Result<()> {
    let n = 5;
    let eps = BlockBijection::epsilon(n)?;
    println!("epsilon = {eps}");
    let m = enumerate_instar(n)?;
    let local: Vec<&BlockBijection> = m
        .elements()
        .unwrap()
        .iter()
        .filter(|b| b.in_local_submonoid())
        .collect();
    let images: HashSet<BlockBijection> = local
        .iter()
        .map(|b| b.upsilon())
        .collect::<instar::Result<_>>()?;
    println!(
        "local submonoid {} elements, {} distinct images, degree {} has {}",
        local.len(),
        images.len(),
        n - 1,
        enumerate_instar(n - 1)?.len()
    );
    let beta = BlockBijection::parse(n, "1,2,4;1,2|3;4,5|5;3")?;
    println!("{beta}  ->  {}", beta.upsilon()?);
    Ok(())
}
