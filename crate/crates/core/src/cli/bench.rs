//! Median-latency comparison of the closed-form solver and the oracle.

use std::io::Write;
use std::time::Instant;

use super::record::BenchRow;
use super::{write_json, BenchArgs, CmdResult, EXIT_DEGREE, EXIT_OK};
use crate::corpus::monic_corpus;
use crate::oracle::{find_roots, OracleConfig};
use crate::poly::RealPolynomial;
use crate::split::solve;

fn median(mut v: Vec<f64>) -> f64 {
    if v.is_empty() {
        return 0.0;
    }
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        0.5 * (v[mid - 1] + v[mid])
    }
}

fn max_residual(p: &RealPolynomial, roots: &[crate::Complex]) -> f64 {
    roots
        .iter()
        .map(|&z| p.evaluate(z).abs())
        .fold(0.0, f64::max)
}

pub fn bench_degree(degree: usize, n: usize, seed: u64) -> BenchRow {
    let corpus = monic_corpus(seed, degree, n);
    let cfg = OracleConfig::default();
    let mut closed_ns = Vec::with_capacity(n);
    let mut oracle_ns = Vec::with_capacity(n);
    let mut closed_res = 0.0_f64;
    let mut oracle_res = 0.0_f64;
    for p in &corpus {
        let t = Instant::now();
        let set = std::hint::black_box(solve(std::hint::black_box(p)));
        closed_ns.push(t.elapsed().as_nanos() as f64);
        let set = set.expect("degrees 2-4 are supported");
        closed_res = closed_res.max(max_residual(p, &set.roots));

        let t = Instant::now();
        let res = std::hint::black_box(find_roots(std::hint::black_box(p), &cfg));
        oracle_ns.push(t.elapsed().as_nanos() as f64);
        let res = res.expect("valid configuration");
        oracle_res = oracle_res.max(max_residual(p, &res.roots));
    }
    BenchRow {
        degree,
        count: n,
        closed_form_median_ns: median(closed_ns),
        closed_form_max_residual: closed_res,
        oracle_median_ns: median(oracle_ns),
        oracle_max_residual: oracle_res,
    }
}

pub fn run(args: &BenchArgs, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let degrees: Vec<usize> = match args.degree {
        Some(d) if (2..=4).contains(&d) => vec![d],
        Some(d) => {
            writeln!(err, "error: bench supports degrees 2 to 4, got {d}")?;
            return Ok(EXIT_DEGREE);
        }
        None => vec![2, 3, 4],
    };
    let rows: Vec<BenchRow> = degrees
        .iter()
        .map(|&d| bench_degree(d, args.n, args.seed))
        .collect();
    if json {
        write_json(&rows, out)?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "{:<7}{:>8}{:>22}{:>22}{:>18}{:>18}",
        "degree",
        "n",
        "closed-form ns (med)",
        "closed-form max res",
        "oracle ns (med)",
        "oracle max res"
    )?;
    for r in &rows {
        writeln!(
            out,
            "{:<7}{:>8}{:>22.0}{:>22.3e}{:>18.0}{:>18.3e}",
            r.degree,
            r.count,
            r.closed_form_median_ns,
            r.closed_form_max_residual,
            r.oracle_median_ns,
            r.oracle_max_residual
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
        assert_eq!(median(vec![]), 0.0);
    }

    #[test]
    fn residual_statistics_are_reproducible() {
        let a = bench_degree(3, 50, 11);
        let b = bench_degree(3, 50, 11);
        assert_eq!(a.closed_form_max_residual, b.closed_form_max_residual);
        assert_eq!(a.oracle_max_residual, b.oracle_max_residual);
        assert_eq!(a.count, 50);
    }
}
