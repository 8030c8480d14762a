//! Named fixture generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AnticommAlgebra, BinaryAlgebra};
use crate::error::{Error, Result};
use crate::format::Document;
use crate::scalar::int;
use crate::tensor::Tensor3;

pub const FIXTURES: [&str; 6] = [
    "quaternions",
    "octonions",
    "split-octonions",
    "sedenions",
    "lie-cross",
    "random-anticomm",
];

pub const RANDOM_ANTICOMM_DIM: usize = 4;
pub const RANDOM_ANTICOMM_BOUND: i64 = 2;

/// The cross product on `R^3`: `[e_i, e_{i+1}] = e_{i+2}` cyclically.
pub fn lie_cross() -> AnticommAlgebra {
    AnticommAlgebra::from_brackets(
        3,
        &[(1, 2, 0, int(1)), (2, 0, 1, int(1)), (0, 1, 2, int(1))],
    )
    .expect("cross product constants are antisymmetric")
}

/// Constants `C^i_{jk}` for `j < k` drawn uniformly from
/// `-RANDOM_ANTICOMM_BOUND..=RANDOM_ANTICOMM_BOUND`, extended antisymmetrically.
pub fn random_anticomm(seed: u64) -> AnticommAlgebra {
    let n = RANDOM_ANTICOMM_DIM;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Tensor3::cube(n);
    for j in 0..n {
        for k in j + 1..n {
            for i in 0..n {
                let v = rng.gen_range(-RANDOM_ANTICOMM_BOUND..=RANDOM_ANTICOMM_BOUND);
                c[(i, j, k)] = int(v);
                c[(i, k, j)] = int(-v);
            }
        }
    }
    AnticommAlgebra::new(c, None).expect("constructed antisymmetric")
}

/// `seed` only affects `random-anticomm`.
pub fn generate_fixture(name: &str, seed: u64) -> Result<Document> {
    Ok(match name {
        "quaternions" => Document::Binary(BinaryAlgebra::quaternions()),
        "octonions" => Document::Binary(BinaryAlgebra::octonions()),
        "split-octonions" => Document::Binary(BinaryAlgebra::split_octonions()),
        "sedenions" => Document::Binary(BinaryAlgebra::sedenions()),
        "lie-cross" => Document::Anticomm(lie_cross()),
        "random-anticomm" => Document::Anticomm(random_anticomm(seed)),
        other => return Err(Error::UnknownFixture(other.to_string())),
    })
}
