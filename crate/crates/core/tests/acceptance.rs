//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde_json::Value;

use slc_invariants::cli::run_with_io;
use slc_invariants::cusp::{enumerate_cycles, CuspCycle};
use slc_invariants::cyclic_quotient::{enumerate_class_t, CyclicQuotient};
use slc_invariants::donaldson::{self, invariant_sextic_basis, invariant_two_forms, ksba_fan};
use slc_invariants::hypersurface::{surface_invariants, tangent_cohomology, virtual_dimension};
use slc_invariants::pinkham::TriplePQR;
use slc_invariants::plumbing::quotient_cusp_graph;
use slc_invariants::quotient_cusp::QuotientCuspSpec;
use slc_invariants::report::{discrepancy_report, DiscrepancyReport};
use slc_invariants::{Error, Mat2};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, format!("took {elapsed:?}, limit {limit:?}"))
}

fn cli(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = std::iter::once("slcinv").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_io(&argv, &mut std::io::empty(), &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8"))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let (code, out) = cli(&["--json", "donaldson", "tautological"]);
    ensure(code == 0, format!("exit {code}"))?;
    let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let o = &v["output"];
    let got = (o["ratio"].as_str(), o["l2_vir"].as_str(), o["i_cm"].as_str());
    ensure(got == (Some("1/48"), Some("6"), Some("12")), format!("got {got:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("ratio 1/48, <c1(lambda2), vir> 6, I_CM 12".into())
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let c = CuspCycle::new(vec![6, 2, 2, 3, 3, 2, 2, 4]).map_err(|e| e.to_string())?;
    let a = c.monodromy();
    ensure(a == Mat2::new(-40, -211, 131, 691), format!("got {a}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("A = {a}"))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let d5 = tangent_cohomology(5).map_err(|e| e.to_string())?.dims;
    let d6 = tangent_cohomology(6).map_err(|e| e.to_string())?.dims;
    ensure(d5 == [0, 40, 0], format!("d=5 gives {d5:?}"))?;
    ensure(d6 == [0, 68, 6], format!("d=6 gives {d6:?}"))?;
    let s = surface_invariants(6).ok_or("no invariants for d=6")?;
    let got = (s.k2, s.e, s.chi, s.pg, s.q);
    ensure(got == (24, 108, 11, 10, 0), format!("invariants {got:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("h(T_S) = {d5:?} for d=5, {d6:?} for d=6; d=6 invariants {got:?}"))
}

fn criterion_4() -> Check {
    for d in 5..=10 {
        let t = tangent_cohomology(d).map_err(|e| e.to_string())?;
        let s = surface_invariants(d).ok_or("missing invariants")?;
        let vd = virtual_dimension(s.k2, s.chi);
        ensure(t.h(1) - t.h(2) == vd, format!("d={d}: h1-h2 = {} but 10chi-2K^2 = {vd}", t.h(1) - t.h(2)))?;
    }
    Ok("h1 - h2 = 10 chi - 2 K^2 for d = 5..10".into())
}

/// Dual cycle from the periodic point diagram: row `i` has `e_i − 1`
/// points and starts in the column where row `i − 1` ends; the dual
/// entries are the column heights plus one.
fn point_diagram_dual(c: &CuspCycle) -> CuspCycle {
    let e = c.entries();
    let period: u64 = e.iter().map(|x| x - 2).sum();
    let mut heights = vec![0u64; period as usize];
    let mut start = 0u64;
    for r in 0..3 * e.len() {
        let len = e[r % e.len()] - 1;
        for col in start..start + len {
            if (period..2 * period).contains(&col) {
                heights[(col - period) as usize] += 1;
            }
        }
        start += len - 1;
    }
    CuspCycle::new(heights.into_iter().map(|h| h + 1).collect()).expect("dual is a valid cycle")
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let cycles = enumerate_cycles(24);
    let mut failures = Vec::new();
    for c in &cycles {
        let d = c.dual();
        let checks = [
            ("involution", d.dual() == *c),
            ("length", d.len() as u64 == c.excess()),
            ("blocks", d.block_form().len() == c.block_form().len()),
            ("trace", d.monodromy().trace() == c.monodromy().trace()),
            ("torsion", d.link_homology() == c.link_homology()),
            ("point diagram", point_diagram_dual(c) == d),
        ];
        for (name, ok) in checks {
            if !ok {
                failures.push(format!("{name} fails for ({c})"));
            }
        }
    }
    ensure(failures.is_empty(), format!("{} failures, first: {}", failures.len(), failures.join("; ")))?;
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{} cycles with sum <= 24, zero failures in {:?}", cycles.len(), start.elapsed()))
}

fn chains(max_len: usize, max_entry: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..max_len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (2..=max_entry).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
        all.extend(out.iter().filter(|v| v.len() >= 2 && v.iter().any(|&x| x > 2)).cloned());
    }
    all
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let specs = chains(4, 5);
    let mut degenerate = 0;
    for e in &specs {
        let s = QuotientCuspSpec::new(e.clone()).map_err(|x| x.to_string())?;
        let order = s.cover_group_order();
        let disc = quotient_cusp_graph(e)
            .and_then(|g| g.discriminant_group())
            .map_err(|x| format!("{e:?}: {x}"))?
            .torsion_order();
        ensure(order == disc, format!("{e:?}: 16b = {order}, discriminant {disc}"))?;
        let cover = match s.cover_resolution_cycle() {
            Err(Error::DegenerateCover) => {
                degenerate += 1;
                continue;
            }
            other => other.map_err(|x| format!("{e:?}: {x}"))?,
        };
        let b = s.b_matrix();
        let (a, d) = (b.a.to_u64().unwrap(), b.d.to_u64().unwrap());
        let expected = CuspCycle::new(vec![2 * a, 2 * d, 2 * a, 2 * d]).map_err(|x| x.to_string())?;
        ensure(cover.dual() == expected, format!("{e:?}: dual of cover is ({})", cover.dual()))?;
        ensure(cover.is_complete_intersection(), format!("{e:?}: cover is not a complete intersection"))?;
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{} chains with k <= 4, e_i <= 5 ({degenerate} with a = d = 1 skipped)", specs.len()))
}

fn criterion_7() -> Check {
    let mut count = 0;
    for p in 3..=8u64 {
        for q in 3..=8u64 {
            for r in 3..=8u64 {
                let Ok(t) = TriplePQR::new(p, q, r) else { continue };
                let Ok(dual) = t.dual_cycle() else { continue };
                let order = t.group_order();
                let det = dual.monodromy().minus_identity().det().abs();
                let closed = BigInt::from(p * q * r) - BigInt::from(p * q + q * r + r * p);
                ensure(
                    order == det && order == closed,
                    format!("({p},{q},{r}): SNF {order}, |det(A-I)| {det}, closed form {closed}"),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples agree on all three routes"))
}

fn criterion_8() -> Check {
    let err = |e: Error| e.to_string();
    for (m, q, index, cover) in [(4, 1, 2, 1), (9, 2, 3, 2)] {
        let c = CyclicQuotient::new(m, q).map_err(err)?.classify().map_err(err)?;
        ensure(
            c.is_wahl && c.index == index && c.cover_a_type() == cover,
            format!("1/{m}(1,{q}): wahl {}, index {}, cover A{}", c.is_wahl, c.index, c.cover_a_type()),
        )?;
    }
    let five = CyclicQuotient::new(5, 1).map_err(err)?.classify();
    ensure(
        matches!(&five, Err(e) if e.code() == "NotClassT"),
        format!("1/5(1,1) gives {five:?}"),
    )?;
    let list = enumerate_class_t(200);
    for (c, w) in &list {
        let rebuilt = CyclicQuotient::new(c.m, w.d * w.n * w.a - 1).map_err(err)?;
        ensure(
            c.m == w.d * w.n * w.n && w.a.gcd(&w.n) == 1 && rebuilt == *c && c.class_t_witness() == Some(*w),
            format!("witness {w:?} does not round-trip for {c}"),
        )?;
    }
    Ok(format!("Wahl 1/4(1,1), 1/9(1,2); 1/5(1,1) rejected; {} witnesses round-trip to m = 200", list.len()))
}

fn criterion_9() -> Check {
    let f = ksba_fan();
    let mut rays = f.rays().to_vec();
    rays.sort();
    ensure(rays == vec![[-2, -1], [0, 1], [2, 1], [4, -1]], format!("rays {rays:?}"))?;
    let mut labels: Vec<_> = f.cones().iter().filter_map(|c| c.label.clone()).collect();
    labels.sort();
    ensure(f.cones().len() == 4 && labels == ["II", "III", "IV", "O"], format!("cones {:?}", f.cones()))?;
    ensure(f.is_complete(), "KSBA fan is not complete")?;
    let s = invariant_sextic_basis();
    ensure(s.dimension == 4, format!("sextic invariants have dimension {}", s.dimension))?;
    let named = donaldson::named_sextics();
    let group = donaldson::GroupAction::sextic_symmetry();
    ensure(named.iter().all(|(_, p)| p.is_invariant(&group)), "a named sextic is not invariant")?;
    let t = invariant_two_forms();
    ensure(
        t.dimension == 1 && t.basis == ["e1^e2 + e3^e4"],
        format!("two-forms: {} {:?}", t.dimension, t.basis),
    )?;
    Ok(format!("4 labeled cones {labels:?}; sextics dim 4; two-forms spanned by {}", t.basis[0]))
}

fn criterion_10() -> Check {
    let golden = include_str!("golden/discrepancy_report.txt");
    ensure(discrepancy_report() == golden, "report differs from the golden file")?;
    let r = DiscrepancyReport::compute();
    ensure(
        r.torsion_order == BigInt::from(649) && r.cover_length == 649 && r.cover_twos == 648 && r.is_consistent(),
        format!("{r:?}"),
    )?;
    Ok("order 649 by Smith form and by cover length; report matches golden file".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("tautological invariant constants", criterion_1),
        ("monodromy of (6,2,2,3,3,2,2,4)", criterion_2),
        ("tangent cohomology of quintic and sextic", criterion_3),
        ("virtual dimension identity", criterion_4),
        ("cusp duality properties", criterion_5),
        ("quotient cusp cross-checks", criterion_6),
        ("Pinkham group orders", criterion_7),
        ("class T suite", criterion_8),
        ("sextic fan and invariants", criterion_9),
        ("discrepancy report", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
