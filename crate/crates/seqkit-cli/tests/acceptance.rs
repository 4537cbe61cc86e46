//! Acceptance suite: end-to-end checks of the exact-arithmetic engine and
//! the CLI harness. Each test covers one numbered criterion and prints a
//! single pass line (visible with `--nocapture`); a failing assertion is
//! the fail line.

use std::path::{Path, PathBuf};
use std::process::Command;

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seqkit_core::convrec::{conv_power_oracle, conv_power_table, trunc_power_table};
use seqkit_core::patalan::{
    patalan_c_recurrence, patalan_forward, patalan_pth_power_recurrence, patalan_sequence,
    super_catalan_closed_form, super_patalan_dual_check, super_patalan_matrix, super_patalan_pair,
};
use seqkit_core::rational::{rat, ratio, Rat};
use seqkit_core::riordan::{
    a_seq_via_inv_rev, a_sequence, a_sequence_recurrence_check, dual_riordan, dual_via_window,
    riordan_build,
};
use seqkit_core::series::x_over_one_minus;
use seqkit_core::{binomial_series, Int, PowerSeries};

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Minimal independent b-file reader for fixture comparisons.
fn read_bfile_terms(path: &Path) -> Vec<Int> {
    std::fs::read_to_string(path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()))
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            let _idx = it.next().unwrap();
            it.next().unwrap().parse::<Int>().unwrap()
        })
        .collect()
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn seqkit_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_seqkit"))
}

#[test]
fn criterion_01_truncpow_fixtures() {
    let d = patalan_pth_power_recurrence(4, 4).unwrap();
    assert_eq!(d, vec![ratio(-1, 4), rat(1), rat(6), rat(56), rat(616)]);
    let table = trunc_power_table(&d, 4, 4).unwrap();
    assert_eq!(table.get(2, 4), &ratio(3, 8));
    assert_eq!(table.get(3, 4), &ratio(7, 2));
    assert_eq!(table.get(4, 4), &ratio(77, 2));
    println!("criterion 1: pass — truncpow(d,n,4) fixtures 3/8, 7/2, 77/2 exact");
}

#[test]
fn criterion_02_three_route_patalan() {
    let n = 12;
    for p in 2..=5u32 {
        let a = patalan_sequence(p, n).unwrap();
        let c = patalan_c_recurrence(p, n + 1).unwrap();
        let d = patalan_pth_power_recurrence(p, n + 1).unwrap();
        let fwd = patalan_forward(p).unwrap();
        let f = PowerSeries::from_poly(&fwd.f_poly, n + 1);
        let rev = f.revert().unwrap();
        for i in 0..=n {
            assert_eq!(a[i], c[i + 1], "p={p} c-recurrence vs a-recurrence at {i}");
            assert_eq!(a[i], d[i + 1], "p={p} pth-power recurrence vs a-recurrence at {i}");
            assert_eq!(a[i], *rev.coeff(i + 1), "p={p} direct revert at {i}");
        }
    }
    let catalan = patalan_sequence(2, n).unwrap();
    let fixture = read_bfile_terms(&fixtures_dir().join("b000108.txt"));
    for i in 0..=n {
        assert!(catalan[i].denom().is_one());
        assert_eq!(catalan[i].numer(), &fixture[i], "Catalan fixture at {i}");
    }
    println!("criterion 2: pass — all three recurrences and direct reversion agree for p=2..5, p=2 is A000108");
}

#[test]
fn criterion_03_conv_oracle_and_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for run in 0..10 {
        let a: Vec<Rat> = (0..9).map(|_| rand_rat(&mut rng)).collect();
        let conv = conv_power_table(&a, 8, 6).unwrap();
        let trunc = trunc_power_table(&a, 8, 6).unwrap();
        for n in 0..=8usize {
            for k in 1..=6usize {
                let oracle = conv_power_oracle(&a, n, k);
                assert_eq!(conv.get(n, k), &oracle, "run {run}, conv({n},{k})");
                let mut a0_pow = Rat::one();
                for _ in 1..k {
                    a0_pow *= &a[0];
                }
                let identity = trunc.get(n, k) + rat(k as i64) * a0_pow * &a[n];
                assert_eq!(conv.get(n, k), &identity, "run {run}, identity({n},{k})");
            }
        }
    }
    println!("criterion 3: pass — conv table = brute-force oracle, conv = trunc + k a0^(k-1) a_n");
}

#[test]
fn criterion_04_reversion_vs_lagrange() {
    let order = 16;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for run in 0..20 {
        let mut coeffs = vec![Rat::zero()];
        let mut f1 = 0i64;
        while f1 == 0 {
            f1 = rng.gen_range(-3..=3);
        }
        coeffs.push(rat(f1));
        for _ in 2..=order {
            coeffs.push(rat(rng.gen_range(-5..=5)));
        }
        let f = PowerSeries::new(coeffs);
        let rev = f.revert().unwrap();
        // Lagrange inversion: b_n = (1/n) [x^(n-1)] (x/f)^n.
        let unit = f.shift_down().unwrap().inverse().unwrap();
        for n in 1..=order {
            let expect = unit.pow(n).coeff(n - 1) / rat(n as i64);
            assert_eq!(rev.coeff(n), &expect, "run {run}, order {n}");
        }
    }
    println!("criterion 4: pass — triangular reversion = Lagrange oracle, 20 random series");
}

#[test]
fn criterion_05_table1_fixtures() {
    let out = seqkit_bin()
        .args(["--json", "verify-oeis", "--terms", "20", "--fixtures"])
        .arg(fixtures_dir())
        .output()
        .unwrap();
    assert!(out.status.success(), "verify-oeis failed: {out:?}");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let reversions: Vec<_> = checks
        .iter()
        .filter(|c| c["name"].as_str().unwrap().starts_with("reversion/"))
        .collect();
    assert_eq!(reversions.len(), 13); // 12 table rows + A000108
    for c in &reversions {
        assert_eq!(c["status"], "Pass", "check {}", c["name"]);
    }

    // Removing a fixture must yield Skipped, never Pass.
    let tmp = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(fixtures_dir()).unwrap() {
        let entry = entry.unwrap();
        if entry.file_name() != "b001002.txt" {
            std::fs::copy(entry.path(), tmp.path().join(entry.file_name())).unwrap();
        }
    }
    let out = seqkit_bin()
        .args(["--json", "verify-oeis", "--terms", "20", "--fixtures"])
        .arg(tmp.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let check = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "reversion/A001002")
        .unwrap();
    assert_eq!(check["status"], "Skipped");
    println!("criterion 5: pass — all Table-1 rows match >= 20 fixture terms; missing fixture skips");
}

#[test]
fn criterion_06_a_sequence_theorem() {
    let m = 8;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for run in 0..20 {
        let mut f_coeffs = vec![rat(if rng.gen_bool(0.5) { 1 } else { -1 })];
        for _ in 1..=m {
            f_coeffs.push(rat(rng.gen_range(-4..=4)));
        }
        // R(1, x f(x)) with enough extra order to realize 8 A-sequence terms
        let order = m + 1;
        let f = PowerSeries::from_poly(&f_coeffs, order - 1).shift_up();
        let g = PowerSeries::one(order);
        let r = riordan_build(&g, &f, order).unwrap();
        let a = a_sequence(&r, m).unwrap();
        let via = a_seq_via_inv_rev(&f_coeffs, m).unwrap();
        assert_eq!(a, via, "run {run}: a_sequence vs INV(REV(f))");
        assert!(a_sequence_recurrence_check(&r, &a), "run {run}: recurrence");
    }
    println!("criterion 6: pass — a_sequence(R(1,xf)) = INV(REV(f)), recurrence holds, 20 arrays");
}

#[test]
fn criterion_07_involution() {
    let n = 16;
    let g = binomial_series(&ratio(-1, 2), &rat(-4), n);
    let f = x_over_one_minus(&rat(-1), &rat(4), n);
    let l = riordan_build(&g, &f, n).unwrap();
    let identity = riordan_build(&PowerSeries::one(n), &PowerSeries::x(n), n).unwrap();
    let product = l.multiply(&l).unwrap();
    assert_eq!(product.entries(), identity.entries());
    println!("criterion 7: pass — R(1/sqrt(1-4x), -x/(1-4x)) squares to R(1,x) at order 16");
}

#[test]
fn criterion_08_duality() {
    let n = 12;
    for &(p, q) in &[(2u32, 1u32), (3, 1), (3, 2), (4, 1), (4, 3)] {
        let (g, f) = super_patalan_pair(p, q, 2 * n + 1).unwrap();
        let window = dual_via_window(&g, &f, n).unwrap();
        let array = dual_riordan(&g.truncated(n + 1), &f.truncated(n + 1)).unwrap();
        for i in 0..=n {
            for j in 0..=n {
                let from_array = if j <= i { array.entry(i, j).clone() } else { Rat::zero() };
                assert_eq!(
                    window.get(i as i64, j as i64),
                    &from_array,
                    "(p,q)=({p},{q}) at ({i},{j})"
                );
            }
        }
    }
    assert!(super_patalan_dual_check(2, 1, n).unwrap(), "(2,1) self-dual");

    // (3,1)/(3,2): dual pair matches the b-file fixtures, 10 terms of column 0.
    let a283150 = read_bfile_terms(&fixtures_dir().join("b283150.txt"));
    let a283151 = read_bfile_terms(&fixtures_dir().join("b283151.txt"));
    let (g, f) = super_patalan_pair(3, 1, 11).unwrap();
    let direct = riordan_build(&g, &f, 11).unwrap();
    let dual = dual_riordan(&g, &f).unwrap();
    for i in 0..10 {
        assert_eq!(direct.column(0)[i].numer(), &a283150[i], "A283150 at {i}");
        assert_eq!(dual.column(0)[i].numer(), &a283151[i], "A283151 at {i}");
        assert!(direct.column(0)[i].denom().is_one());
        assert!(dual.column(0)[i].denom().is_one());
    }
    let (g2, f2) = super_patalan_pair(3, 2, 11).unwrap();
    let dual2 = dual_riordan(&g2, &f2).unwrap();
    for i in 0..10 {
        assert_eq!(dual2.column(0)[i].numer(), &a283150[i], "dual of (3,2) at {i}");
    }
    println!("criterion 8: pass — window dual = series dual for five (p,q); A283150/A283151 match");
}

#[test]
fn criterion_09_super_catalan_quadrant() {
    let q = super_patalan_matrix(2, 1, 6).unwrap();
    let mut count = 0;
    for m in 0..=6u64 {
        for n in 0..=6u64 {
            let s = super_catalan_closed_form(m, n);
            assert_eq!(q.get(m as i64, n as i64), &s, "S({m},{n})");
            assert!(s.is_positive());
            count += 1;
        }
    }
    assert_eq!(count, 49);
    println!("criterion 9: pass — Q(2,1) window equals S(m,n) closed form, 49 entries");
}

#[test]
fn criterion_10_harness_integrity() {
    let tmp = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(fixtures_dir()).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), tmp.path().join(entry.file_name())).unwrap();
    }

    // Corrupt one value: verification must fail with exit code 1 and report
    // the first mismatch.
    let target = tmp.path().join("b000108.txt");
    let corrupted = std::fs::read_to_string(&target)
        .unwrap()
        .replace("2 2", "2 99");
    std::fs::write(&target, corrupted).unwrap();
    let out = seqkit_bin()
        .args(["--json", "verify-oeis", "--terms", "20", "--fixtures"])
        .arg(tmp.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "corrupted fixture: {out:?}");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let check = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "reversion/A000108")
        .unwrap();
    assert_eq!(check["status"], "Fail");
    assert_eq!(check["first_mismatch"], 2);

    // Malformed b-file: exit code 2.
    std::fs::write(&target, "0 1\nnot a valid line\n").unwrap();
    let out = seqkit_bin()
        .args(["verify-oeis", "--terms", "20", "--fixtures"])
        .arg(tmp.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "malformed b-file: {out:?}");

    // Determinism: identical invocations are byte-identical.
    let run = || {
        seqkit_bin()
            .args(["--json", "verify-oeis", "--terms", "20", "--fixtures"])
            .arg(fixtures_dir())
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stderr, second.stderr);
    let patalan = || {
        seqkit_bin()
            .args(["--json", "patalan", "--p", "3", "--order", "16"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(patalan(), patalan());
    println!("criterion 10: pass — exit 1 on mismatch, exit 2 on malformed b-file, byte-identical runs");
}
