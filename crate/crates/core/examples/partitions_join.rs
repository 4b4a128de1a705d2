//! Partitions as idempotents: composing two idempotents joins their partitions.

use instar::{bell, enumerate_partitions, BlockBijection, Partition};

fn main() -> instar::Result<()> {
    let p: Partition = "1,2|3|4".parse()?;
    let q: Partition = "1|2,3|4".parse()?;
    let joined = p.join(&q)?;
    println!("{p} v {q} = {joined}");
    let e = BlockBijection::idempotent(&p).compose(&BlockBijection::idempotent(&q))?;
    println!("as idempotents: {e}  (domain {})", e.domain());
    assert_eq!(e, BlockBijection::idempotent(&joined));

    for size in 0..=6 {
        println!(
            "B({size}) = {} = {}",
            bell(size),
            enumerate_partitions(size).count()
        );
    }
    Ok(())
}
