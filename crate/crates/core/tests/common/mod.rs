pub mod mirror_jacobian;
pub mod weyl_words;
