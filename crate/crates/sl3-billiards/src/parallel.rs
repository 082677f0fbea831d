//! Thread-pool versions of the two constructions. The job count only changes
//! scheduling; results are merged in seed order and equal the serial ones.

use std::num::NonZeroUsize;
use std::thread;

use sl3_billiards_core::billiards::{lambda_q, step1, wall_stage};
use sl3_billiards_core::treegen::{lemma_report, phi_tilde_multiset, seeds_up_to, LambdaVariant, LemmaReport, ZPrime};
use sl3_billiards_core::{Error, LabelledPoint, PointMultiset, Result};

/// Maps `f` over `items` on up to `jobs` threads, keeping input order.
fn map_chunks<T, U, F>(items: &[T], jobs: NonZeroUsize, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    if jobs.get() == 1 || items.len() < 2 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs.get());
    thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| {
                let f = &f;
                scope.spawn(move || c.iter().map(f).collect::<Vec<U>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

pub fn build_ztilde(ell: i64, max_n: u32, jobs: NonZeroUsize) -> Result<PointMultiset> {
    let (x, seeds) = step1(ell, max_n)?;
    let start: PointMultiset = seeds.iter().map(|s| s.point).collect();
    let walls = wall_stage(&start, ell, max_n)?;
    let alcove_seeds: Vec<(LabelledPoint, u64)> = walls.seeds.iter().map(|(q, m)| (*q, m)).collect();
    let parts = map_chunks(&alcove_seeds, jobs, |(q, m)| lambda_q(*q, ell, max_n).map(|l| l.scaled(*m)));
    let mut z = x.clone();
    z.union_with(&walls.points);
    for part in parts {
        z.union_with(&part?);
    }
    Ok(z.difference(&x))
}

pub fn build_zprime(ell: i64, max_n: u32, variant: LambdaVariant, jobs: NonZeroUsize) -> Result<ZPrime> {
    sl3_billiards_core::lattice::check_ell(ell)?;
    let seeds = seeds_up_to(ell, max_n, variant);
    let images = map_chunks(&seeds, jobs, |g| phi_tilde_multiset(g.mu, g.label, ell, max_n));
    let mut out = ZPrime::default();
    for (g, img) in seeds.into_iter().zip(images) {
        match img {
            Ok(img) => {
                out.points.union_with(&img);
                out.accepted.push(g);
            }
            Err(Error::NotAlmostCorner(_)) => out.rejected.push(g),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

pub fn verify_lemma(ell: i64, max_n: u32, variant: LambdaVariant, jobs: NonZeroUsize) -> Result<LemmaReport> {
    let ztilde = build_ztilde(ell, max_n, jobs)?;
    let zprime = build_zprime(ell, max_n, variant, jobs)?;
    Ok(lemma_report(ell, max_n, variant, &ztilde, &zprime))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_serial() {
        for jobs in [1, 3, 8] {
            let jobs = NonZeroUsize::new(jobs).unwrap();
            for ell in [3, 5] {
                assert_eq!(
                    build_ztilde(ell, 90, jobs).unwrap(),
                    sl3_billiards_core::billiards::build_ztilde(ell, 90).unwrap()
                );
                assert_eq!(
                    build_zprime(ell, 90, LambdaVariant::Corrected, jobs).unwrap(),
                    sl3_billiards_core::treegen::build_zprime(ell, 90, LambdaVariant::Corrected).unwrap()
                );
            }
        }
    }
}
