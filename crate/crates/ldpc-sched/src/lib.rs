//! LDPC decoding under informed dynamic scheduling.
//!
//! This crate implements log-domain sum-product decoding of binary LDPC codes
//! with six message-passing schedules: classic flooding BP, horizontal layered
//! BP (LBP), residual BP (RBP), residual-decaying RBP (RD-RBP), silent-variable
//! -node-free scheduling (SVNF), and weighted residual layered BP (WR-LBP),
//! which scores residuals with a per-row layer weight before selection.
//!
//! The crate is organised around the decoding pipeline:
//!
//! - [`codes`]: parity-check matrix construction, systematic generator
//!   derivation, GF(2) encoding and syndromes, alist file I/O.
//! - [`tanner`]: edge-indexed bipartite graph view of a parity-check matrix.
//! - [`channel`]: BPSK modulation, AWGN sampling and channel LLRs.
//! - [`decoders`]: the message-passing kernels and the six schedulers.
//! - [`audit`]: per-iteration operation counters and their closed-form
//!   expected values per schedule.
//! - [`harness`]: Monte-Carlo BER/FER simulation over an Eb/N0 and iteration
//!   grid, with deterministic per-frame random streams and CSV output.
//!
//! The `ldpc-sim` binary exposes the harness (`simulate`) and the counter
//! parity report (`audit`) on the command line.
//!
//! # Example
//!
//! ```
//! use ldpc_sched::codes::{construct_regular, systematize, encode};
//! use ldpc_sched::tanner::TannerGraph;
//! use ldpc_sched::channel::{ChannelConfig, modulate, transmit, frame_rng};
//! use ldpc_sched::decoders::{decode, Scheduler, DecodeOptions};
//!
//! let h = construct_regular(96, 3, 6, 7).unwrap();
//! let (gen, hp) = systematize(&h).unwrap();
//! let graph = TannerGraph::from_matrix(&hp);
//!
//! let msg = vec![0u8; gen.k()];
//! let cw = encode(&gen, &msg).unwrap();
//! let cfg = ChannelConfig::new(3.0, 0.5).unwrap();
//! let rx = transmit(&modulate(&cw.bits), &cfg, &mut frame_rng(1, 0));
//!
//! let opts = DecodeOptions { max_iter: 20, ..DecodeOptions::default() };
//! let out = decode(&graph, &rx.llr, Scheduler::WrLbp, &opts).unwrap();
//! assert!(out.converged);
//! assert_eq!(out.decoded, cw.bits);
//! ```

pub mod audit;
pub mod channel;
pub mod codes;
pub mod decoders;
pub mod harness;
pub mod tanner;

mod gf2;
mod seeding;
