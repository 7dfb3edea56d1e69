//! Exact arithmetic in Q(zeta_n): roots of unity, Galois action, and the
//! rational / real / complex classification used for fields of character
//! values.
//!
//! ```sh
//! cargo run -p chardeg --example cyclotomic_arithmetic
//! ```

use chardeg::cyclotomic::{rational, Cyclotomic, ValueClass};

fn zeta(n: u64, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

fn main() -> chardeg::Result<()> {
    // 1 + zeta_3 + zeta_3^2 = 0, exactly.
    let sum = &(&Cyclotomic::one() + &zeta(3, 1)) + &zeta(3, 2);
    println!("1 + z3 + z3^2 = {sum}");

    // zeta_5 + zeta_5^4 is the golden ratio conjugate (-1 + sqrt 5)/2:
    // real but irrational, and multiplying with its Galois partner gives -1.
    let golden = &zeta(5, 1) + &zeta(5, 4);
    let partner = &zeta(5, 2) + &zeta(5, 3);
    println!("(z5 + z5^4) = {golden}  classifies as {:?}", golden.classify());
    println!("(z5 + z5^4)(z5^2 + z5^3) = {}", &golden * &partner);

    // Galois action zeta -> zeta^k permutes values; k = -1 is conjugation.
    println!("sigma_2(z5) = {}", zeta(5, 1).galois(2)?);
    println!("conj(z5 + z5^4) = {} (fixed)", golden.conjugate());
    assert_eq!(golden.conjugate(), golden);

    // Values at different conductors compare through embeddings.
    assert_eq!(zeta(2, 1), zeta(6, 3));
    println!("z2 == z6^3: both are {}", zeta(6, 3));

    // Classification drives the Q / R / C field labels.
    for (label, value) in [
        ("z3 + z3^2", &zeta(3, 1) + &zeta(3, 2)),
        ("z5 + z5^4", golden.clone()),
        ("z5", zeta(5, 1)),
        ("z6 + z6^5", &zeta(6, 1) + &zeta(6, 5)),
    ] {
        let class = value.classify();
        let as_rational = value.to_rational();
        println!("{label}: {value} -> {class:?}, rational part {as_rational:?}");
        if class == ValueClass::Rational {
            assert!(as_rational.is_some());
        }
    }

    // Scalar arithmetic stays exact: (1/2) * (z8 + z8^7) = cos(pi/4) = sqrt(2)/2.
    let half_trace = (&zeta(8, 1) + &zeta(8, 7)).scale(&rational(1, 2));
    println!("(z8 + z8^7)/2 = {half_trace} ({:?})", half_trace.classify());
    Ok(())
}
