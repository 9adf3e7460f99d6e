//! Randomized exact property suites, grouped by the layer they exercise.
//! Each check is tallied by name so a report lists pass/fail counts per
//! identity.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::blade::{self, Blade};
use crate::chart::eta_project;
use crate::flat::AffineFlat;
use crate::lap::{self, eta_inverse_lift, f_ap_subspace, h1_normalize, l_ap_equations, l_ap_flat, tau_ap};
use crate::linalg;
use crate::multivector::Multivector;
use crate::rational::{self, Rational, RationalVector};
use crate::sample::{self, SampleRng};
use crate::spin::{is_spun_member, j_lift, two_term_coefficients, SpunElement, TwoTermTargets};
use crate::text::parse_multivector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// Description of the first failing case.
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suite {
    pub name: String,
    pub dim: usize,
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn new(name: &str, dim: usize) -> Self {
        Suite {
            name: name.to_string(),
            dim,
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(Check {
                    name: name.to_string(),
                    passed: 0,
                    failed: 0,
                    first_failure: None,
                });
                self.checks.len() - 1
            }
        };
        let c = &mut self.checks[idx];
        if ok {
            c.passed += 1;
        } else {
            c.failed += 1;
            if c.first_failure.is_none() {
                c.first_failure = Some(detail());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn total(&self) -> (u64, u64) {
        self.checks
            .iter()
            .fold((0, 0), |(p, f), c| (p + c.passed, f + c.failed))
    }

    pub fn merge(&mut self, other: Suite) {
        for c in other.checks {
            match self.checks.iter_mut().find(|x| x.name == c.name) {
                Some(x) => {
                    x.passed += c.passed;
                    x.failed += c.failed;
                    if x.first_failure.is_none() {
                        x.first_failure = c.first_failure;
                    }
                }
                None => self.checks.push(c),
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, fl) = self.total();
        writeln!(
            f,
            "[{}] {} suite, d = {}: {p} passed, {fl} failed",
            if self.ok() { "PASS" } else { "FAIL" },
            self.name,
            self.dim
        )?;
        for c in &self.checks {
            write!(
                f,
                "  {:<4} {:<62} {:>6} passed {:>4} failed",
                if c.failed == 0 { "ok" } else { "FAIL" },
                c.name,
                c.passed,
                c.failed
            )?;
            if let Some(why) = &c.first_failure {
                write!(f, "  first failure: {why}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn mv(d: usize, s: &str) -> Multivector {
    parse_multivector(d, s).expect("fixed literal")
}

/// Associativity, generator relations, involution laws, grade completeness
/// and the fixed worked examples.
pub fn algebra_suite(d: usize, trials: usize, seed: u64) -> Suite {
    let mut s = Suite::new("algebra", d);
    let mut r = sample::rng(seed);

    for j in 1..=d + 2 {
        let ej = Multivector::generator(d, j);
        let sq = &ej * &ej;
        let want = if j <= d + 1 {
            -Multivector::one(d)
        } else {
            Multivector::zero(d)
        };
        s.record("generator squares", sq == want, || format!("e{j}^2 = {sq}"));
        for k in 1..=d + 2 {
            if k == j {
                continue;
            }
            let ek = Multivector::generator(d, k);
            let (jk, kj) = (&ej * &ek, &ek * &ej);
            if j <= d + 1 && k <= d + 1 {
                s.record("generators anticommute", jk == -&kj, || {
                    format!("e{j}e{k} = {jk}, e{k}e{j} = {kj}")
                });
            } else {
                s.record("degenerate generator is central", jk == kj, || {
                    format!("e{j}e{k} = {jk}, e{k}e{j} = {kj}")
                });
            }
        }
    }

    let x = mv(4, "e3e4 + e1e5e6 + e2e6");
    s.record("worked example: alpha", x.alpha() == mv(4, "e3e4 + e1e5e6 - e2e6"), || {
        format!("alpha = {}", x.alpha())
    });
    s.record("worked example: reverse", x.reverse() == mv(4, "-e3e4 - e1e5e6 + e2e6"), || {
        format!("t = {}", x.reverse())
    });
    let y = mv(d, "e1 + e1e2");
    s.record(
        "worked example: N(e1 + e1e2) = 2",
        y.norm() == Multivector::scalar(d, rational::int(2)),
        || format!("N = {}", y.norm()),
    );

    for _ in 0..trials {
        let x = sample::random_multivector(&mut r, d, 6);
        let y = sample::random_multivector(&mut r, d, 6);
        let z = sample::random_multivector(&mut r, d, 6);
        let left = &(&x * &y) * &z;
        let right = &x * &(&y * &z);
        s.record("associativity", left == right, || format!("x = {x}, y = {y}, z = {z}"));
        s.record("distributivity", &x * &(&y + &z) == &(&x * &y) + &(&x * &z), || {
            format!("x = {x}, y = {y}, z = {z}")
        });
        let top = Multivector::generator(d, d + 2);
        s.record("degenerate generator is central", &top * &x == &x * &top, || format!("x = {x}"));
        let xy = &x * &y;
        s.record("alpha is multiplicative", xy.alpha() == &x.alpha() * &y.alpha(), || {
            format!("x = {x}, y = {y}")
        });
        s.record("reverse is anti-multiplicative", xy.reverse() == &y.reverse() * &x.reverse(), || {
            format!("x = {x}, y = {y}")
        });
        s.record(
            "conjugate is anti-multiplicative",
            xy.conjugate() == &y.conjugate() * &x.conjugate(),
            || format!("x = {x}, y = {y}"),
        );
        s.record(
            "involutions square to identity",
            x.alpha().alpha() == x && x.reverse().reverse() == x && x.conjugate().conjugate() == x,
            || format!("x = {x}"),
        );
        s.record(
            "conjugate = alpha . reverse",
            x.conjugate() == x.reverse().alpha() && x.conjugate() == x.alpha().reverse(),
            || format!("x = {x}"),
        );
        let w = sample::random_multivector(&mut r, d, 8).filter(Blade::in_z0);
        let total = (0..=d as u32 + 1)
            .step_by(2)
            .map(|m| w.grade_select(m).expect("even grade of a Z0 element"))
            .fold(Multivector::zero(d), |acc, t| &acc + &t);
        s.record("grade completeness", total == w, || format!("w = {w}"));
    }
    s
}

fn g_quadric(x: &[Rational]) -> Rational {
    &x[0] * &x[7] - &x[1] * &x[6] + &x[2] * &x[5] - &x[3] * &x[4]
}

fn c_quadric(x: &[Rational]) -> Rational {
    x[..4].iter().map(|c| c * c).sum()
}

/// Group law, decomposition, action and double cover for random `Spun(d)`
/// elements; for `d = 3` also the quadric characterization.
pub fn group_suite(d: usize, trials: usize, seed: u64) -> Suite {
    let mut s = Suite::new("group", d);
    let mut r = sample::rng(seed);
    let one = Multivector::one(d);
    for _ in 0..trials {
        let x = sample::random_spun(&mut r, d);
        let y = sample::random_spun(&mut r, d);
        let (xv, yv) = (x.value(), y.value());
        s.record("norm is one", xv.norm() == one, || format!("x = {xv}"));
        s.record(
            "inverse is conjugate",
            &(xv * &xv.conjugate()) == &one
                && &(&xv.conjugate() * xv) == &one
                && x.inverse().value() == &xv.conjugate(),
            || format!("x = {xv}"),
        );
        let xy = xv * yv;
        s.record("closure under product", is_spun_member(&xy), || format!("x = {xv}, y = {yv}"));
        match SpunElement::decompose(xv) {
            Ok(back) => s.record(
                "unique decomposition round trip",
                back.gamma().value() == x.gamma().value() && back.translation_v() == x.translation_v(),
                || format!("x = {xv}"),
            ),
            Err(e) => s.record("unique decomposition round trip", false, || format!("x = {xv}: {e}")),
        }
        match x.compose(&y) {
            Ok(p) => s.record(
                "gamma of product is product of gammas",
                p.gamma().value() == &(x.gamma().value() * y.gamma().value()),
                || format!("x = {xv}, y = {yv}"),
            ),
            Err(e) => s.record("gamma of product is product of gammas", false, || e.to_string()),
        }
        let u = sample::small_vector(&mut r, d, 5);
        let w = sample::small_vector(&mut r, d, 5);
        let iso = match (x.act(&u), x.act(&w)) {
            (Ok(xu), Ok(xw)) => {
                rational::norm_sq(&rational::sub(&xu, &xw)) == rational::norm_sq(&rational::sub(&u, &w))
            }
            _ => false,
        };
        s.record("action is an isometry", iso, || format!("x = {xv}"));
        let hom = match (x.compose(&y), y.act(&w)) {
            (Ok(p), Ok(yw)) => p.act(&w).ok() == x.act(&yw).ok(),
            _ => false,
        };
        s.record("action is a homomorphism", hom, || format!("x = {xv}, y = {yv}"));
        match (x.to_rigid_motion(), x.negate().to_rigid_motion()) {
            (Ok(m), Ok(mn)) => {
                s.record("rotation has determinant one", linalg::determinant(m.rotation()).is_one(), || {
                    format!("x = {xv}")
                });
                s.record("x and -x give the same motion", m == mn, || format!("x = {xv}"));
                if xv != yv && xv != &-yv {
                    let my = y.to_rigid_motion().ok();
                    s.record("distinct elements give distinct motions", my.as_ref() != Some(&m), || {
                        format!("x = {xv}, y = {yv}")
                    });
                }
            }
            _ => s.record("rotation has determinant one", false, || format!("x = {xv}")),
        }
    }
    if d == 3 {
        s.merge(quadric_suite(trials.max(200), seed ^ 0x5eed));
    }
    s
}

/// `Spun(3) = G ∩ C` on random samples, plus the `J_3` scaling.
pub fn quadric_suite(samples: usize, seed: u64) -> Suite {
    let mut s = Suite::new("quadric", 3);
    let mut r = sample::rng(seed);
    for _ in 0..samples {
        let x = sample::random_spun(&mut r, 3);
        let c = x.value().z0_coordinates();
        s.record("Spun(3): x1x8 - x2x7 + x3x6 - x4x5 = 0", g_quadric(&c).is_zero(), || {
            format!("x = {}", x.value())
        });
        s.record("Spun(3): x1^2 + x2^2 + x3^2 + x4^2 = 1", c_quadric(&c).is_one(), || {
            format!("x = {}", x.value())
        });
        let k = loop {
            let k = sample::small_rational(&mut r, 7);
            if !k.is_zero() {
                break k;
            }
        };
        let j = x.value().scale(&k);
        let jc = j.z0_coordinates();
        s.record(
            "J_3: G quadric and x1^2+..+x4^2 = N(j)",
            g_quadric(&jc).is_zero() && Some(c_quadric(&jc)) == j.norm().as_scalar(),
            || format!("j = {j}"),
        );
    }
    s
}

fn distinct_from(r: &mut SampleRng, a: &[Rational]) -> RationalVector {
    loop {
        let b = sample::small_vector(r, a.len(), 4);
        if b != a {
            return b;
        }
    }
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Dimensions of `F_ap` and `L_ap`, the explicit equations, the
/// intersection dichotomy, bad pairs, hulls, and `eta` compatibility.
pub fn flat_suite(d: usize, trials: usize, seed: u64) -> Suite {
    let mut s = Suite::new("flat", d);
    let mut r = sample::rng(seed);
    let full = AffineFlat::full(binom2(d + 1));
    for t in 0..trials {
        let a = sample::small_vector(&mut r, d, 6);
        let p = sample::small_vector(&mut r, d, 6);
        let show = |a: &[Rational], p: &[Rational]| {
            format!("a = ({}), p = ({})", rational::format_vector(a), rational::format_vector(p))
        };
        let f = f_ap_subspace(&a, &p).expect("valid dimension");
        s.record("dim F_ap = 2^(d-1)", f.dim() == Some(1 << (d - 1)), || show(&a, &p));
        let l = l_ap_flat(&a, &p).expect("valid dimension");
        s.record("dim L_ap = C(d,2)", l.dim() == Some(binom2(d)), || show(&a, &p));
        let sys = l_ap_equations(&a, &p).expect("valid dimension");
        s.record("explicit equations cut out L_ap", sys.solution_set() == l, || show(&a, &p));

        let g = sample::random_spin_plus(&mut r, d);
        let on = tau_ap(g.value(), &a, &p)
            .ok()
            .and_then(|x| eta_project(&x).ok())
            .is_some_and(|y| l.contains(&y));
        s.record("eta(tau_ap(gamma)) lies on L_ap", on, || show(&a, &p));

        // distance matched; every third trial is a bad pair a - b = q - p
        let (b, q) = if t % 3 == 2 {
            let b = distinct_from(&mut r, &a);
            let q = rational::add(&p, &rational::sub(&a, &b));
            (b, q)
        } else {
            sample::distance_matched(&mut r, &a, &p)
        };
        let fbq = f_ap_subspace(&b, &q).expect("valid dimension");
        let meet = f.intersect(&fbq).expect("same ambient");
        s.record(
            "matched: dim(F_ap ∩ F_bq) = 2^(d-2)",
            meet.dim() == Some(1 << (d - 2)),
            || format!("{}, b = ({}), q = ({})", show(&a, &p), rational::format_vector(&b), rational::format_vector(&q)),
        );
        let lbq = l_ap_flat(&b, &q).expect("valid dimension");
        let lmeet = l.intersect(&lbq).expect("same ambient");
        let bad = rational::sub(&a, &b) == rational::sub(&q, &p);
        let ok = if bad {
            lmeet.is_empty()
        } else {
            lmeet.dim() == Some(binom2(d - 1))
        };
        s.record(
            "matched: L_ap ∩ L_bq empty iff a-b = q-p, else dim C(d-1,2)",
            ok,
            || format!("{}, b = ({}), q = ({}), meet dim {:?}", show(&a, &p), rational::format_vector(&b), rational::format_vector(&q), lmeet.dim()),
        );

        // distance mismatched, or a shared source with different targets
        let (b, q) = if t % 4 == 3 {
            (a.clone(), distinct_from(&mut r, &p))
        } else {
            loop {
                let b = distinct_from(&mut r, &a);
                let q = sample::small_vector(&mut r, d, 4);
                if rational::norm_sq(&rational::sub(&a, &b)) != rational::norm_sq(&rational::sub(&q, &p)) {
                    break (b, q);
                }
            }
        };
        let fbq = f_ap_subspace(&b, &q).expect("valid dimension");
        s.record(
            "mismatched: dim(F_ap ∩ F_bq) = 0",
            f.intersect(&fbq).expect("same ambient").dim() == Some(0),
            || format!("{}, b = ({}), q = ({})", show(&a, &p), rational::format_vector(&b), rational::format_vector(&q)),
        );
        let lbq = l_ap_flat(&b, &q).expect("valid dimension");
        s.record(
            "mismatched: hull(L_ap, L_bq) is the whole chart",
            l.hull(&lbq).ok() == Some(full.clone()),
            || format!("{}, b = ({}), q = ({})", show(&a, &p), rational::format_vector(&b), rational::format_vector(&q)),
        );
    }
    s
}

/// `eta` is a bijection from `Spun(d)_+` onto the chart, made constructive
/// by the lift.
pub fn eta_suite(d: usize, trials: usize, seed: u64) -> Suite {
    let mut s = Suite::new("eta", d);
    let mut r = sample::rng(seed);
    let chart_len = binom2(d + 1);
    for _ in 0..trials {
        let x = sample::random_spun_plus(&mut r, d);
        let ok = eta_project(x.value()).ok().and_then(|y| {
            let j = eta_inverse_lift(d, &y).ok()?;
            let back = eta_project(j.value()).ok()?;
            Some(back == y && Some(j.value().clone()) == h1_normalize(x.value()).ok())
        });
        s.record("lift(eta(x)) = x / x_1", ok == Some(true), || format!("x = {}", x.value()));

        let rr = loop {
            let v = sample::small_rational(&mut r, 9);
            if !v.is_zero() {
                break v;
            }
        };
        let lambdas: TwoTermTargets = CoordinatePairs::new(d)
            .filter_map(|jk| {
                let c = sample::small_rational(&mut r, 9);
                (!c.is_zero()).then_some((jk, c))
            })
            .collect();
        let ok = j_lift(d, &rr, &lambdas).ok().map(|g| {
            let back = two_term_coefficients(g.value());
            back == (rr.clone(), lambdas.clone())
                && Some(g.normsq().clone()) == g.value().norm().as_scalar()
        });
        s.record("j_lift reproduces (r, lambda)", ok == Some(true), || {
            let shown: Vec<String> = lambdas.iter().map(|((j, k), c)| format!("({j},{k}) = {c}")).collect();
            format!("r = {rr}, lambdas = {}", shown.join(", "))
        });

        let y: RationalVector = (0..chart_len).map(|_| sample::small_rational(&mut r, 6)).collect();
        let ok = eta_inverse_lift(d, &y)
            .ok()
            .and_then(|j| eta_project(j.value()).ok())
            .is_some_and(|back| back == y);
        s.record("eta(lift(y)) = y", ok, || format!("y = ({})", rational::format_vector(&y)));
    }
    s
}

struct CoordinatePairs {
    d: usize,
    j: usize,
    k: usize,
}

impl CoordinatePairs {
    fn new(d: usize) -> Self {
        CoordinatePairs { d, j: 1, k: 2 }
    }
}

impl Iterator for CoordinatePairs {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        if self.j > self.d {
            return None;
        }
        let out = (self.j, self.k);
        self.k += 1;
        if self.k > self.d + 1 {
            self.j += 1;
            self.k = self.j + 1;
        }
        Some(out)
    }
}

fn grades_within(x: &Multivector, allowed: &[u32]) -> bool {
    x.grades().iter().all(|g| allowed.contains(g))
}

/// The three grade laws for conjugation by Spin, right multiplication by
/// `e_d (i(a) + e_d)`, and `tau_ap`.
pub fn mterm_suite(d: usize, trials: usize, seed: u64) -> Suite {
    let mut s = Suite::new("m-term", d);
    let mut r = sample::rng(seed);
    for _ in 0..trials {
        let m = 2 * r.gen_range(0..=d / 2) as u32;
        let x = sample::random_pure_grade_even(&mut r, d, d, m);
        let k = 2 * r.gen_range(1..=2);
        let g = sample::random_spin(&mut r, d, k);
        let y = &(g.value() * &x) * &g.value().conjugate();
        s.record("conjugation by Spin keeps m-terms", grades_within(&y, &[m]) && !y.is_zero(), || {
            format!("m = {m}, x = {x}, gamma = {}", g.value())
        });

        let m = 2 * r.gen_range(0..=(d - 1) / 2) as u32;
        let x = sample::random_pure_grade_even(&mut r, d, d - 1, m);
        let mut a = sample::small_vector(&mut r, d, 5);
        if a[d - 1] == -Rational::one() {
            a[d - 1] = Rational::zero();
        }
        let ed = Multivector::generator(d, d);
        let ia = Multivector::embed(d, &a).expect("length d");
        let z = &(&x * &ed) * &(&ia + &ed);
        let m_part = z.grade_select(m).map(|t| !t.is_zero()).unwrap_or(false);
        s.record(
            "x e_d (i(a) + e_d) has m- and (m+2)-terms, nonzero m-part",
            grades_within(&z, &[m, m + 2]) && m_part,
            || format!("m = {m}, x = {x}, a = ({})", rational::format_vector(&a)),
        );

        let top = d as u32 + 1;
        let m = 2 * r.gen_range(0..=top / 2);
        let has_grade = blade::z0_basis(d).iter().any(|b| b.grade() == m);
        if !has_grade {
            continue;
        }
        let x = sample::random_pure_grade_z0(&mut r, d, m);
        let a = sample::small_vector(&mut r, d, 5);
        let p = sample::small_vector(&mut r, d, 5);
        let t = lap::tau_ap(&x, &a, &p).expect("valid dimension");
        let m_part = t.grade_select(m).map(|v| !v.is_zero()).unwrap_or(false);
        s.record(
            "tau_ap keeps m- and (m+2)-terms, nonzero m-part",
            grades_within(&t, &[m, m + 2]) && m_part,
            || format!("m = {m}, x = {x}"),
        );
    }
    s
}

/// The suites behind `spun verify`.
pub fn run_all(d: usize, trials: usize, seed: u64) -> Vec<Suite> {
    vec![
        algebra_suite(d, trials, seed),
        group_suite(d, trials, seed.wrapping_add(1)),
        {
            let mut f = flat_suite(d, trials, seed.wrapping_add(2));
            f.merge(eta_suite(d, trials, seed.wrapping_add(4)));
            f
        },
        mterm_suite(d, trials, seed.wrapping_add(3)),
    ]
}
