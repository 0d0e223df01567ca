//! Built-in checks against closed forms and the brute-force oracles.

use altermatic_core::oracle::alt_sigma_naive;
use altermatic_core::proof::{audit, AuditOutcome};
use altermatic_core::{
    alt, alt_sigma, chromatic_number, complete_uniform, kneser_graph, random_hypergraph, schrijver_hypergraph,
    verify_theorem, AltMinOptions, Coloring, LinearOrder, Parallelism, SignVector,
};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, f: impl FnOnce() -> Result<String, String>) -> Check {
    match f() {
        Ok(detail) => Check { name, pass: true, detail },
        Err(detail) => Check { name, pass: false, detail },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_all(parallelism: Parallelism) -> Vec<Check> {
    vec![
        check("alternation_example", || {
            let x = SignVector::from_word("RRBB0R0RB").map_err(|e| e.to_string())?;
            ensure(alt(&x) == 4 && x.support_size() == 7, || format!("alt {} support {}", alt(&x), x.support_size()))?;
            Ok("alt(RRBB0R0RB) = 4, support 7".into())
        }),
        check("kneser_chromatic", || {
            for (m, r) in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)] {
                let h = complete_uniform(m, r).map_err(|e| e.to_string())?;
                let (chi, _) = chromatic_number(&kneser_graph(&h));
                ensure(chi == m - 2 * r + 2, || format!("KG({m},{r}) chi {chi}"))?;
            }
            Ok("chi(KG(m,r)) = m-2r+2 on 5 cases".into())
        }),
        check("schrijver_chromatic", || {
            for (m, r) in [(4, 2), (5, 2), (6, 2), (7, 2)] {
                let h = schrijver_hypergraph(m, r).map_err(|e| e.to_string())?;
                let (chi, _) = chromatic_number(&kneser_graph(&h));
                ensure(chi == m - 2 * r + 2, || format!("SG({m},{r}) chi {chi}"))?;
            }
            Ok("chi(SG(m,r)) = m-2r+2 on 4 cases".into())
        }),
        check("alt_sigma_vs_oracle", || {
            let mut cases = 0;
            for seed in 0..12u64 {
                let n = 3 + (seed % 4) as usize;
                let h = random_hypergraph(n, 6, 1..=3.min(n), seed).map_err(|e| e.to_string())?;
                let sigma = LinearOrder::new((1..=n).rev().collect()).map_err(|e| e.to_string())?;
                for k in 1..=3 {
                    for s in [LinearOrder::identity(n), sigma.clone()] {
                        let fast = alt_sigma(&h, &s, k).map_err(|e| e.to_string())?.alt_value;
                        let slow = alt_sigma_naive(&h, &s, k);
                        ensure(fast == slow, || format!("seed {seed} k {k}: {fast} vs {slow}"))?;
                        cases += 1;
                    }
                }
            }
            Ok(format!("{cases} cases agree"))
        }),
        check("bound_holds", || {
            for seed in 0..12u64 {
                let h = random_hypergraph(6, 8, 1..=3, 100 + seed).map_err(|e| e.to_string())?;
                for k in 1..=2 {
                    let opts = AltMinOptions::exhaustive().with_parallelism(parallelism);
                    let v = verify_theorem(&h, k, &opts).map_err(|e| e.to_string())?;
                    ensure(v.holds, || format!("seed {seed} k {k}: chi {} < bound {}", v.chi, v.bound))?;
                }
            }
            Ok("chi >= bound on 24 cases".into())
        }),
        check("audit_finds_witness", || {
            let h = complete_uniform(4, 2).map_err(|e| e.to_string())?;
            let c = Coloring::from_assignment(vec![1; h.edge_count()]).map_err(|e| e.to_string())?;
            let r = audit(&h, &c, 1, &LinearOrder::identity(4), 1_000_000).map_err(|e| e.to_string())?;
            match r.outcome {
                AuditOutcome::Witness(w) => {
                    let (a, b) = (h.edges()[w.edge_a], h.edges()[w.edge_b]);
                    ensure(w.verify(&h, &c) && a.union(b).len() == 4, || format!("bad witness {a} {b}"))?;
                    Ok(format!("{a} and {b} share color {}", w.color))
                }
                other => Err(format!("expected witness, got {other:?}")),
            }
        }),
        check("audit_accepts_proper", || {
            let h = complete_uniform(5, 2).map_err(|e| e.to_string())?;
            let (_, c) = chromatic_number(&kneser_graph(&h));
            let r = audit(&h, &c, 1, &LinearOrder::identity(5), 1_000_000).map_err(|e| e.to_string())?;
            ensure(r.outcome == AuditOutcome::ProperWithinBound, || format!("{:?}", r.outcome))?;
            Ok("optimal coloring of the Petersen graph accepted".into())
        }),
    ]
}
