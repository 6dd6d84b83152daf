//! Desk-scale neural machine translation with character-aware source word
//! embeddings.
//!
//! The toolkit builds source word vectors from characters (multi-width 1D
//! convolutions, max-over-time pooling, highway layers) instead of a lookup
//! table, feeds them into an attention-based bidirectional GRU
//! encoder-decoder, and ships the full pipeline around that model:
//! preprocessing, vocabulary construction, training, greedy/beam decoding
//! with attention-guided unknown-word replacement, and corpus BLEU scoring.
//!
//! Modules:
//! - [`tensor`]: dense tensors with tape-based reverse-mode gradients, Adam.
//! - [`charembed`]: the character-based source word embedder.
//! - [`seq2seq`]: bidirectional GRU encoder, additive attention, GRU decoder.
//! - [`corpus`]: tokenizer, truecaser, punctuation normalizer, filters,
//!   vocabularies, corpus statistics.
//! - [`trainer`]: batching, the training loop, binary checkpoints.
//! - [`inference`]: greedy and beam search, `<unk>` replacement.
//! - [`evalkit`]: corpus BLEU and system comparison reports.
//! - [`cli`]: the `charnmt` command-line front end.

pub mod charembed;
pub mod cli;
pub mod corpus;
pub mod evalkit;
pub mod inference;
pub mod seq2seq;
pub mod tensor;
pub mod trainer;

mod error;

pub use error::{Error, Result};
