use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Recorder, VerifyConfig};
use crate::error::Result;
use crate::gf::Field;
use crate::octonion::{OctIndex, Octonion, Octonions};

/// Basis elements: determine any linear identity.
pub(crate) fn linear_set(o: &Octonions) -> Vec<Octonion> {
    OctIndex::ALL.iter().map(|&i| o.basis(i)).collect()
}

/// Basis plus pairwise sums: determine any quadratic identity.
pub(crate) fn quadratic_set(o: &Octonions) -> Vec<Octonion> {
    let b = linear_set(o);
    let mut out = b.clone();
    for i in 0..8 {
        for j in i + 1..8 {
            out.push(o.add(&b[i], &b[j]));
        }
    }
    out
}

fn pairs<T: Copy>(a: &[T], b: &[T]) -> Vec<(T, T)> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect()
}

fn triples<T: Copy>(a: &[T], b: &[T], c: &[T]) -> Vec<(T, T, T)> {
    pairs(a, b).into_iter().flat_map(|(x, y)| c.iter().map(move |&z| (x, y, z))).collect()
}

pub(crate) fn random_oct(o: &Octonions, rng: &mut ChaCha8Rng) -> Octonion {
    o.from_index(rng.gen_range(0..o.count()))
}

pub(crate) fn random_isotropic(o: &Octonions, rng: &mut ChaCha8Rng) -> Octonion {
    loop {
        let x = random_oct(o, rng);
        if o.norm(&x).is_zero() {
            return x;
        }
    }
}

/// The identities, each taking three arguments (unused ones ignored).
struct Identity {
    name: &'static str,
    /// Degree in each argument: 0 unused, 1 linear, 2 quadratic.
    degrees: [u8; 3],
    holds: fn(&Octonions, &Octonion, &Octonion, &Octonion) -> bool,
}

fn identities() -> Vec<Identity> {
    vec![
        Identity {
            name: "conjugation reverses products",
            degrees: [1, 1, 0],
            holds: |o, x, y, _| o.conj(&o.mul(x, y)) == o.mul(&o.conj(y), &o.conj(x)),
        },
        Identity {
            name: "conjugation is an involution",
            degrees: [1, 0, 0],
            holds: |o, x, _, _| o.conj(&o.conj(x)) == *x,
        },
        Identity {
            name: "x + conj(x) = Tr(x)",
            degrees: [1, 0, 0],
            holds: |o, x, _, _| o.add(x, &o.conj(x)) == o.scalar(o.trace(x)),
        },
        Identity {
            name: "trace associativity",
            degrees: [1, 1, 1],
            holds: |o, x, y, z| o.trace(&o.mul(x, &o.mul(y, z))) == o.trace(&o.mul(&o.mul(x, y), z)),
        },
        Identity {
            name: "trace commutativity",
            degrees: [1, 1, 0],
            holds: |o, x, y, _| o.trace(&o.mul(x, y)) == o.trace(&o.mul(y, x)),
        },
        Identity {
            name: "norm multiplicativity",
            degrees: [2, 2, 0],
            holds: |o, x, y, _| o.norm(&o.mul(x, y)) == o.field().mul(o.norm(x), o.norm(y)),
        },
        Identity {
            name: "x conj(x) = N(x)",
            degrees: [2, 0, 0],
            holds: |o, x, _, _| o.mul(x, &o.conj(x)) == o.scalar(o.norm(x)),
        },
        Identity {
            name: "Moufang (x(yz))x = (xy)(zx)",
            degrees: [2, 1, 1],
            holds: |o, x, y, z| o.mul(&o.mul(x, &o.mul(y, z)), x) == o.mul(&o.mul(x, y), &o.mul(z, x)),
        },
        Identity {
            name: "Moufang x(y(zy)) = ((xy)z)y",
            degrees: [1, 2, 1],
            holds: |o, x, y, z| o.mul(x, &o.mul(y, &o.mul(z, y))) == o.mul(&o.mul(&o.mul(x, y), z), y),
        },
        Identity {
            name: "Moufang ((xy)x)z = x(y(xz))",
            degrees: [2, 1, 1],
            holds: |o, x, y, z| o.mul(&o.mul(&o.mul(x, y), x), z) == o.mul(x, &o.mul(y, &o.mul(x, z))),
        },
        Identity {
            name: "flexible (xy)x = x(yx)",
            degrees: [2, 1, 0],
            holds: |o, x, y, _| o.mul(&o.mul(x, y), x) == o.mul(x, &o.mul(y, x)),
        },
        Identity {
            name: "left alternative x(xy) = (xx)y",
            degrees: [2, 1, 0],
            holds: |o, x, y, _| o.mul(x, &o.mul(x, y)) == o.mul(&o.mul(x, x), y),
        },
        Identity {
            name: "right alternative (yx)x = y(xx)",
            degrees: [2, 1, 0],
            holds: |o, x, y, _| o.mul(&o.mul(y, x), x) == o.mul(y, &o.mul(x, x)),
        },
        Identity {
            name: "x(yx) = Tr(yx)x - N(x)conj(y)",
            degrees: [2, 1, 0],
            holds: |o, x, y, _| {
                let rhs = o.sub(&o.scale(o.trace(&o.mul(y, x)), x), &o.scale(o.norm(x), &o.conj(y)));
                o.mul(x, &o.mul(y, x)) == rhs
            },
        },
        Identity {
            name: "Tr((xy)(z conj(x))) = N(x)Tr(yz)",
            degrees: [2, 1, 1],
            holds: |o, x, y, z| {
                let lhs = o.trace(&o.mul(&o.mul(x, y), &o.mul(z, &o.conj(x))));
                lhs == o.field().mul(o.norm(x), o.trace(&o.mul(y, z)))
            },
        },
    ]
}

/// The two identities for isotropic `x`, linear in `y` and `z`.
fn isotropic_identities(o: &Octonions, x: &Octonion, y: &Octonion, z: &Octonion) -> [bool; 2] {
    let first = o.mul(x, &o.mul(y, x)) == o.scale(o.trace(&o.mul(y, x)), x);
    let second = o.trace(&o.mul(&o.mul(x, y), &o.mul(z, &o.conj(x)))).is_zero();
    [first, second]
}

pub(crate) fn run(cfg: &VerifyConfig, rng: &mut ChaCha8Rng, rec: &mut Recorder) -> Result<()> {
    let f = Field::with_order(cfg.q)?;
    let o = Octonions::new(&f);
    let lin = linear_set(&o);
    let quad = quadratic_set(&o);
    let zero = [Octonion::ZERO];
    let set = |d: u8| -> &[Octonion] {
        match d {
            0 => &zero,
            1 => &lin,
            _ => &quad,
        }
    };
    for id in identities() {
        let [a, b, c] = id.degrees;
        rec.each(
            &format!("{} [determining set]", id.name),
            triples(set(a), set(b), set(c)),
            |(x, y, z)| (id.holds)(&o, &x, &y, &z),
        );
        rec.each(&format!("{} [random]", id.name), 0..cfg.samples, |_| {
            let (x, y, z) = (random_oct(&o, rng), random_oct(&o, rng), random_oct(&o, rng));
            (id.holds)(&o, &x, &y, &z)
        });
    }
    if cfg.q == 2 {
        let all: Vec<Octonion> = o.all().collect();
        rec.each("norm multiplicativity [all pairs]", pairs(&all, &all), |(x, y)| {
            o.norm(&o.mul(&x, &y)) == f.mul(o.norm(&x), o.norm(&y))
        });
        rec.each("conjugation reverses products [all pairs]", pairs(&all, &all), |(x, y)| {
            o.conj(&o.mul(&x, &y)) == o.mul(&o.conj(&y), &o.conj(&x))
        });
    }
    // isotropic x: exhaustive over x when the isotropic set is small
    let iso_total = (cfg.q as u64).pow(7) + (cfg.q as u64).pow(4) - (cfg.q as u64).pow(3) - 1;
    if iso_total <= 20_000 {
        let iso: Vec<Octonion> = o.isotropic().collect();
        for (k, name) in ["x(yx) = xTr(yx) for N(x) = 0", "Tr((xy)(z conj(x))) = 0 for N(x) = 0"]
            .iter()
            .enumerate()
        {
            rec.each(&format!("{name} [all isotropic x]"), triples(&iso, &lin, &lin), |(x, y, z)| {
                isotropic_identities(&o, &x, &y, &z)[k]
            });
        }
    }
    for (k, name) in ["x(yx) = xTr(yx) for N(x) = 0", "Tr((xy)(z conj(x))) = 0 for N(x) = 0"]
        .iter()
        .enumerate()
    {
        rec.each(&format!("{name} [random]"), 0..cfg.samples, |_| {
            let x = random_isotropic(&o, rng);
            let (y, z) = (random_oct(&o, rng), random_oct(&o, rng));
            isotropic_identities(&o, &x, &y, &z)[k]
        });
    }
    Ok(())
}
