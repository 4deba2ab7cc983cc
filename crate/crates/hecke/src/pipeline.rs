//! Thread orchestration around the pure computations in `hecke-core`.
//! Results never depend on the thread count.

use std::thread;

use hecke_core::exactlin::{FieldMatrix, PrimeField};
use hecke_core::heckepoly::Sl3Datum;
use hecke_core::ledger::{analyze_weight, assemble_report, LedgerError, LedgerReport};
use hecke_core::modsym::{ManinBasisSpace, ModSymError};
use hecke_core::paramodular::{complement_dims, ParamodularDims, ParamodularError};

/// Ledger with the weight-2 and weight-4 analyses run side by side when `threads > 1`.
pub fn build_report(
    level: u64,
    primes: &[u64],
    sl3: Option<&[Sl3Datum]>,
    gritsenko: Option<u64>,
    field: PrimeField,
    threads: usize,
) -> Result<LedgerReport, LedgerError> {
    let (w2, w4) = if threads > 1 {
        thread::scope(|s| {
            let w4 = s.spawn(|| analyze_weight(level, 3, field, primes));
            let w2 = analyze_weight(level, 1, field, primes);
            (w2, w4.join().expect("weight-4 analysis panicked"))
        })
    } else {
        (analyze_weight(level, 1, field, primes), analyze_weight(level, 3, field, primes))
    };
    assemble_report(level, primes, &w2?, &w4?, sl3, gritsenko)
}

/// Maps `f` over `items` on up to `threads` threads, keeping input order.
fn par_map<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    if threads <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    thread::scope(|s| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| s.spawn(|| c.iter().map(&f).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// T_l for each prime, computed concurrently from the shared space.
pub fn hecke_operators(space: &ManinBasisSpace, primes: &[u64], threads: usize) -> Result<Vec<FieldMatrix>, ModSymError> {
    par_map(primes, threads, |&l| space.hecke_operator(l)).into_iter().collect()
}

/// Paramodular dimensions for each prime, with Gritsenko dimensions looked up by `gritsenko`.
pub fn paramodular_table(
    primes: &[u64],
    gritsenko: impl Fn(u64) -> Option<u64> + Sync,
    threads: usize,
) -> Result<Vec<ParamodularDims>, ParamodularError> {
    par_map(primes, threads, |&p| complement_dims(p, gritsenko(p))).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hecke_core::arith::primes_in;
    use hecke_core::modsym::build_space;

    #[test]
    fn thread_count_does_not_change_results() {
        let f = PrimeField::default_field();
        let one = build_report(11, &[2, 3], None, None, f, 1).unwrap();
        let four = build_report(11, &[2, 3], None, None, f, 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, hecke_core::ledger::build_report(11, &[2, 3], None, None, f).unwrap());

        let ps = primes_in(2, 500);
        let seq = paramodular_table(&ps, |_| None, 1).unwrap();
        assert_eq!(seq, paramodular_table(&ps, |_| None, 3).unwrap());
        assert_eq!(seq.len(), ps.len());

        let space = build_space(37, 3).unwrap();
        assert_eq!(hecke_operators(&space, &[2, 3, 5], 1).unwrap(), hecke_operators(&space, &[2, 3, 5], 3).unwrap());
    }

    #[test]
    fn errors_surface_from_workers() {
        let f = PrimeField::default_field();
        assert!(build_report(12, &[5], None, None, f, 2).is_err());
        assert!(paramodular_table(&[5, 9], |_| None, 2).is_err());
    }
}
