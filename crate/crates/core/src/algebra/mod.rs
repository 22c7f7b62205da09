//! The word algebra over D: shuffle Hopf structure, harmonic product on H¹
//! and the multi-letter auxiliary algebra.

mod harmonic;
mod index;
mod lincomb;
mod shuffle;
mod word;

pub use harmonic::{harmonic, harmonic_power, hoffman_decomposition, in_h0, in_h1, reg_star, reg_star_word};
pub use index::{word_of_index, Index};
pub use lincomb::LinComb;
pub use shuffle::{antipode, antipode_lin, coproduct, shuffle, shuffle_words};
pub use word::{Alphabet, Label, MultiLetter, MultiWord, Word};
