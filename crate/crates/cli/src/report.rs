//! Reproducibility report: every headline quantity of the library is
//! recomputed from scratch and compared against a frozen expected rendering.
//!
//! The report body is fully deterministic — the random spot checks use a
//! fixed-seed generator — so regenerating it must produce byte-identical
//! output. Wall-clock timings go to stderr only and never enter the body.

use std::time::Instant;

use serde::Serialize;

use ek_core::{
    count_distinct, ek_quotient, ek_quotient_from_sphere, ek_sphere, enumerate_types, family,
    is_diffeomorphic, multiplicative_sequence, path_component_lower_bound, period_quotient,
    reference_count_loop, separation_certificate, t_coeff, verify_mu_implication, BundleId,
    CoreError, GenusPoly, Partition, QuotientId, Rat, SeriesKind,
};

/// One regenerated quantity. `matches` is always `expected == computed` on
/// the rendered strings, so a reader can audit the comparison by eye.
#[derive(Serialize)]
pub struct ClaimRecord {
    pub claim_id: &'static str,
    pub name: &'static str,
    /// The formula or constant the claim pins down, in this tool's notation.
    pub anchor: &'static str,
    pub expected: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub claims: Vec<ClaimRecord>,
    pub all_match: bool,
}

struct Claim {
    id: &'static str,
    name: &'static str,
    anchor: &'static str,
    build: fn() -> (String, String),
}

const CLAIMS: [Claim; 9] = [
    Claim {
        id: "C01",
        name: "genus golden polynomials",
        anchor: "AHAT_2 = (7 p1^2 - 4 p2)/5760; L_4 = (381 p4 - 71 p3 p1 - 19 p2^2 + 22 p2 p1^2 - 3 p1^4)/14175",
        build: claim_genus_goldens,
    },
    Claim {
        id: "C02",
        name: "top-coefficient ratio constants",
        anchor: "t_k = -1/(2^(2k+1) (2^(2k-1) - 1))",
        build: claim_t_constants,
    },
    Claim {
        id: "C03",
        name: "type and pair counts",
        anchor: "representatives of k mod 2^(4n-1) q_n up to 2k -> +/-2k",
        build: claim_counts,
    },
    Claim {
        id: "C04",
        name: "quadratic reference loop",
        anchor: "mu scaled by 16256; branch residues scaled by 65024; loop bound 16255",
        build: claim_replica,
    },
    Claim {
        id: "C05",
        name: "equal invariants force equal pairs",
        anchor: "k(k+1)/(2^(4n) q_n) determines {that +/- (2k+1)/2^(4n+1)}",
        build: claim_mu_implication,
    },
    Claim {
        id: "C06",
        name: "quotient route consistency",
        anchor: "mu(M_k)/2 +/- (2k+1)/2^(4n+1), halved before residues are taken",
        build: claim_route_agreement,
    },
    Claim {
        id: "C07",
        name: "period guard and family diffeomorphism",
        anchor: "period 2^(4n-1) q_n l; family members k + j * 2^(4n-1) q_n l",
        build: claim_periods_and_families,
    },
    Claim {
        id: "C08",
        name: "certificates and path-component bound",
        anchor: "delta = (4n-2)^2 ((2k0+l)^2 - (2k1+l)^2)/l; det [[7/5760, -1/1440], [-1/45, 7/45]] = 1/5760",
        build: claim_certificates,
    },
    Claim {
        id: "C09",
        name: "equivalence laws and witness oracle",
        anchor: "gamma^2 = 1 (mod l) and 2 k1 = 2 gamma k2 (mod l)",
        build: claim_equivalence,
    },
];

pub fn build_report() -> Report {
    let mut claims = build_claims(true);
    let start = Instant::now();
    let again = build_claims(false);
    let first = serde_json::to_string(&claims).expect("serializable claims");
    let second = serde_json::to_string(&again).expect("serializable claims");
    let expected = "regeneration byte-identical".to_string();
    let computed = if first == second {
        "regeneration byte-identical".to_string()
    } else {
        "regeneration diverged".to_string()
    };
    log_time("C10", "determinism of regeneration", start);
    claims.push(ClaimRecord {
        claim_id: "C10",
        name: "determinism of regeneration",
        anchor: "byte equality of the serialized claim list across two builds",
        matches: expected == computed,
        expected,
        computed,
    });
    let all_match = claims.iter().all(|c| c.matches);
    Report { tool: "ek", version: env!("CARGO_PKG_VERSION"), claims, all_match }
}

fn build_claims(log: bool) -> Vec<ClaimRecord> {
    CLAIMS
        .iter()
        .map(|claim| {
            let start = Instant::now();
            let (expected, computed) = (claim.build)();
            if log {
                log_time(claim.id, claim.name, start);
            }
            ClaimRecord {
                claim_id: claim.id,
                name: claim.name,
                anchor: claim.anchor,
                matches: expected == computed,
                expected,
                computed,
            }
        })
        .collect()
}

fn log_time(id: &str, name: &str, start: Instant) {
    eprintln!("[ek report] {id} {name}: {:?}", start.elapsed());
}

fn run_or_err(f: impl FnOnce() -> Result<String, CoreError>) -> String {
    f().unwrap_or_else(|e| format!("error: {e}"))
}

fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer, denom)
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn poly(degree: u32, terms: &[(&[u32], i64, i64)]) -> GenusPoly {
    GenusPoly::from_terms(degree, terms.iter().map(|(p, n, d)| (part(p), rat(*n, *d))))
}

fn bundle(n: u8, k: i64, l: i64) -> Result<BundleId, CoreError> {
    BundleId::new(n, k, l)
}

/// Closed forms frozen with their textbook integer numerators; construction
/// reduces them, so display always agrees with the computed pipeline's.
fn golden_catalog() -> Vec<(&'static str, GenusPoly)> {
    vec![
        ("AHAT_1", poly(1, &[(&[1], -1, 24)])),
        ("AHAT_2", poly(2, &[(&[1, 1], 7, 5760), (&[2], -4, 5760)])),
        (
            "AHAT_4",
            poly(
                4,
                &[
                    (&[4], -192, 464486400),
                    (&[3, 1], 512, 464486400),
                    (&[2, 2], 208, 464486400),
                    (&[2, 1, 1], -904, 464486400),
                    (&[1, 1, 1, 1], 381, 464486400),
                ],
            ),
        ),
        ("L_1", poly(1, &[(&[1], 1, 3)])),
        ("L_2", poly(2, &[(&[2], 7, 45), (&[1, 1], -1, 45)])),
        (
            "L_4",
            poly(
                4,
                &[
                    (&[4], 381, 14175),
                    (&[3, 1], -71, 14175),
                    (&[2, 2], -19, 14175),
                    (&[2, 1, 1], 22, 14175),
                    (&[1, 1, 1, 1], -3, 14175),
                ],
            ),
        ),
    ]
}

fn computed_catalog() -> Vec<(&'static str, GenusPoly)> {
    vec![
        ("AHAT_1", multiplicative_sequence(SeriesKind::Ahat, 1)),
        ("AHAT_2", multiplicative_sequence(SeriesKind::Ahat, 2)),
        ("AHAT_4", multiplicative_sequence(SeriesKind::Ahat, 4)),
        ("L_1", multiplicative_sequence(SeriesKind::L, 1)),
        ("L_2", multiplicative_sequence(SeriesKind::L, 2)),
        ("L_4", multiplicative_sequence(SeriesKind::L, 4)),
    ]
}

fn render_catalog(catalog: &[(&'static str, GenusPoly)]) -> String {
    catalog
        .iter()
        .map(|(label, p)| format!("{label} = {p}"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// A circulating variant of the quartic closed form carries -904 on the
/// p1^4 monomial; the series pipeline decides between +381 and -904, and the
/// claim records which side it landed on.
fn claim_genus_goldens() -> (String, String) {
    let quartic = part(&[1, 1, 1, 1]);
    let wrong = rat(-904, 464486400);
    let golden = golden_catalog();
    let computed = computed_catalog();
    let golden_quartic = golden[2].1.coeff(&quartic);
    let computed_quartic = computed[2].1.coeff(&quartic);
    let expected = format!(
        "{}; [p1^4]AHAT_4 = {} != {}",
        render_catalog(&golden),
        golden_quartic,
        wrong
    );
    let computed = format!(
        "{}; [p1^4]AHAT_4 = {} {} {}",
        render_catalog(&computed),
        computed_quartic,
        if computed_quartic == wrong { "==" } else { "!=" },
        wrong
    );
    (expected, computed)
}

fn claim_t_constants() -> (String, String) {
    let expected = "t_2 = -1/224; t_4 = -1/65024".to_string();
    let computed = format!("t_2 = {}; t_4 = {}", t_coeff(2), t_coeff(4));
    (expected, computed)
}

fn claim_counts() -> (String, String) {
    let expected =
        "types(1,1) = 16; types(2,1) = 4096; pairs(n=1) = 16; pairs(n=2) = 4096".to_string();
    let computed = run_or_err(|| {
        Ok(format!(
            "types(1,1) = {}; types(2,1) = {}; pairs(n=1) = {}; pairs(n=2) = {}",
            enumerate_types(1, 1)?.count,
            enumerate_types(2, 1)?.count,
            count_distinct(1)?.quotient_pairs,
            count_distinct(2)?.quotient_pairs,
        ))
    });
    (expected, computed)
}

fn claim_replica() -> (String, String) {
    let expected =
        "countermu = 4096 (clean 4096); countermuquo = 4096 (clean 4096)".to_string();
    let computed = run_or_err(|| {
        let replica = reference_count_loop();
        let clean = count_distinct(2)?;
        Ok(format!(
            "countermu = {} (clean {}); countermuquo = {} (clean {})",
            replica.countermu, clean.sphere_values, replica.countermuquo, clean.quotient_pairs,
        ))
    });
    (expected, computed)
}

fn claim_mu_implication() -> (String, String) {
    let expected =
        "n = 1: holds, 0 counterexamples; n = 2: holds, 0 counterexamples".to_string();
    let computed = run_or_err(|| {
        let mut sides = Vec::new();
        for n in [1u8, 2] {
            let check = verify_mu_implication(n)?;
            sides.push(format!(
                "n = {n}: {}, {} counterexamples",
                if check.holds { "holds" } else { "fails" },
                check.counterexamples.len(),
            ));
        }
        Ok(sides.join("; "))
    });
    (expected, computed)
}

fn claim_route_agreement() -> (String, String) {
    let expected = "n = 1: 56/56 agree; n = 2: 16256/16256 agree".to_string();
    let computed = run_or_err(|| {
        let mut sides = Vec::new();
        for n in [1u8, 2] {
            let period = period_quotient(n)?;
            let mut agree = 0i64;
            for k in 0..period {
                let q = QuotientId::new(n, k)?;
                if ek_quotient(&q) == ek_quotient_from_sphere(&q) {
                    agree += 1;
                }
            }
            sides.push(format!("n = {n}: {agree}/{period} agree"));
        }
        Ok(sides.join("; "))
    });
    (expected, computed)
}

fn claim_periods_and_families() -> (String, String) {
    let expected = "mu(1,0,1) != mu(1,28,1); mu(1,0,1) == mu(1,56,1); families diffeomorphic 50/50"
        .to_string();
    let computed = run_or_err(|| {
        let base = ek_sphere(&bundle(1, 0, 1)?).value;
        let half = ek_sphere(&bundle(1, 28, 1)?).value;
        let full = ek_sphere(&bundle(1, 56, 1)?).value;
        let mut good = 0u32;
        let mut rng = Lcg::new(0x5EED_CAFE);
        for _ in 0..50 {
            let n = 1 + (rng.next() % 2) as u8;
            let k = rng.range(-200, 200);
            let l = rng.range(1, 40);
            let m = rng.range(2, 5) as u64;
            let b = bundle(n, k, l)?;
            let members = family(&b, m)?;
            if members.len() == m as usize
                && members
                    .iter()
                    .map(|member| is_diffeomorphic(&b, member))
                    .all(|v| v.is_ok_and(|v| v.diffeomorphic))
            {
                good += 1;
            }
        }
        Ok(format!(
            "mu(1,0,1) {} mu(1,28,1); mu(1,0,1) {} mu(1,56,1); families diffeomorphic {good}/50",
            if base == half { "==" } else { "!=" },
            if base == full { "==" } else { "!=" },
        ))
    });
    (expected, computed)
}

fn claim_certificates() -> (String, String) {
    let expected = "diffeo((1,0,1), (1,7,1)) = true; \
                    cert(1,1,0,7): delta = -896/1, separated = true, det = 1/5760, solution = [0/1, 0/1]; \
                    cert(2,1,0,7): delta = -8064/1, separated = true, det = -1/87091200, solution = [0/1, 0/1]; \
                    bound((1,0,1), 5) = 5"
        .to_string();
    let computed = run_or_err(|| {
        let b0 = bundle(1, 0, 1)?;
        let b1 = bundle(1, 7, 1)?;
        let verdict = is_diffeomorphic(&b0, &b1)?;
        let mut pieces = vec![format!("diffeo((1,0,1), (1,7,1)) = {}", verdict.diffeomorphic)];
        for n in [1u8, 2] {
            let cert = separation_certificate(n, 1, 0, 7)?;
            let system = &cert.system_solution;
            pieces.push(format!(
                "cert({n},1,0,7): delta = {}, separated = {}, det = {}, solution = [{}, {}]",
                cert.delta,
                cert.separated,
                system.determinant,
                system.solution[0],
                system.solution[1],
            ));
        }
        pieces.push(format!("bound((1,0,1), 5) = {}", path_component_lower_bound(&b0, 5)?));
        Ok(pieces.join("; "))
    });
    (expected, computed)
}

fn claim_equivalence() -> (String, String) {
    let expected =
        "reflexive 200/200; symmetric 200/200; transitive 200/200; oracle agreement 16900/16900"
            .to_string();
    let computed = run_or_err(|| {
        let mut rng = Lcg::new(0x0DD5_EED5);
        let (mut reflexive, mut symmetric, mut transitive) = (0u32, 0u32, 0u32);
        for _ in 0..200 {
            let n = 1 + (rng.next() % 2) as u8;
            let l = rng.range(1, 30);
            let a = bundle(n, rng.range(-50, 50), l)?;
            let b = bundle(n, rng.range(-50, 50), l)?;
            let c = bundle(n, rng.range(-50, 50), l)?;
            let ab = is_diffeomorphic(&a, &b)?.diffeomorphic;
            let ba = is_diffeomorphic(&b, &a)?.diffeomorphic;
            let bc = is_diffeomorphic(&b, &c)?.diffeomorphic;
            let ac = is_diffeomorphic(&a, &c)?.diffeomorphic;
            reflexive += u32::from(is_diffeomorphic(&a, &a)?.diffeomorphic);
            symmetric += u32::from(ab == ba);
            transitive += u32::from(!(ab && bc) || ac);
        }
        let mut agree = 0u32;
        let mut total = 0u32;
        for l in 1..=50i64 {
            for n in [1u8, 2] {
                for k1 in -6..=6i64 {
                    for k2 in -6..=6i64 {
                        total += 1;
                        let b1 = bundle(n, k1, l)?;
                        let b2 = bundle(n, k2, l)?;
                        let verdict = is_diffeomorphic(&b1, &b2)?;
                        let oracle = brute_force_witness(&b1, &b2);
                        if (verdict.diffeomorphic, verdict.gamma_witness) == oracle {
                            agree += 1;
                        }
                    }
                }
            }
        }
        Ok(format!(
            "reflexive {reflexive}/200; symmetric {symmetric}/200; transitive {transitive}/200; \
             oracle agreement {agree}/{total}"
        ))
    });
    (expected, computed)
}

/// Independent decision procedure: equal invariants plus a direct scan of
/// every residue in `[0, l)` for a unit square root relating the parameters.
fn brute_force_witness(b1: &BundleId, b2: &BundleId) -> (bool, Option<u64>) {
    if ek_sphere(b1).value != ek_sphere(b2).value {
        return (false, None);
    }
    let l = b1.l() as i128;
    let (k1, k2) = (b1.k() as i128, b2.k() as i128);
    for gamma in 0..l {
        let unit = (gamma * gamma - 1).rem_euclid(l) == 0;
        let relates = (2 * k1 - 2 * gamma * k2).rem_euclid(l) == 0;
        if unit && relates {
            return (true, Some(gamma as u64));
        }
    }
    (false, None)
}

/// Fixed-seed linear congruential generator, so the spot checks are
/// reproducible and the report body never depends on ambient randomness.
struct Lcg(u64);

impl Lcg {
    fn new(seed: u64) -> Lcg {
        Lcg(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }
}
