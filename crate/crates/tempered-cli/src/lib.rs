//! Command-line surface for the tempered-forms library: class groups,
//! temperament enumeration, definition-level verification, genus lists,
//! discriminant scans and SVG figures, with table/CSV/JSON output.

pub mod figure;
pub mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tempered_core::classgroup::{wr_witnesses, ClassGroup};
use tempered_core::eisenstein::{one_three_records, three_one_records, three_three};
use tempered_core::two_two;
use tempered_core::verifier::{self, Gram, PairLattice};
use tempered_core::{Int, Rational};

use figure::{render_figure, FigureSpec};
use output::*;

#[derive(Parser)]
#[command(
    name = "tempered",
    version,
    about = "Classify, enumerate and verify tempered perfect forms on plane lattice pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Table is the default; `--csv` and `--json` are mutually exclusive.
#[derive(Args)]
struct OutputOpts {
    /// Emit versioned CSV instead of a table
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    /// Emit JSON instead of a table
    #[arg(long)]
    json: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// For subcommands without a CSV schema.
#[derive(Args)]
struct JsonOpts {
    /// Emit JSON instead of a table
    #[arg(long)]
    json: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "3and3")]
    ThreeAndThree,
    #[value(name = "3and1")]
    ThreeAndOne,
    #[value(name = "1and3")]
    OneAndThree,
    #[value(name = "2and2")]
    TwoAndTwo,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced forms of a discriminant with orders, ambiguity and
    /// well-roundedness flags, the composition table and genus partition
    Classgroup {
        /// Negative discriminant (0 or 1 mod 4)
        #[arg(long, allow_hyphen_values = true)]
        disc: Int,
        #[command(flatten)]
        fmt: OutputOpts,
    },
    /// Verified temperaments of one shape for a prime index
    Temperaments {
        /// Prime index of the sublattice
        #[arg(long)]
        ell: Int,
        /// Which shape to enumerate
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        fmt: OutputOpts,
    },
    /// Classify one explicit pair from scratch
    Verify {
        /// Quadratic form coefficients a,b,c (rationals allowed) of the
        /// ambient basis: the value of (x,y) is a x^2 + b xy + c y^2
        #[arg(long, allow_hyphen_values = true)]
        gram: String,
        /// Sublattice basis rows h11,h12,h21,h22 in ambient coordinates
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
        /// Prime index of the sublattice
        #[arg(long)]
        ell: Int,
        #[command(flatten)]
        fmt: JsonOpts,
    },
    /// Classify every index-ell sublattice of the hexagonal lattice
    Oracle {
        #[arg(long)]
        ell: Int,
        #[command(flatten)]
        fmt: JsonOpts,
    },
    /// Residues mod |D| represented by each genus of a discriminant
    Genus {
        #[arg(long, allow_hyphen_values = true)]
        disc: Int,
        #[command(flatten)]
        fmt: JsonOpts,
    },
    /// Well-rounded witnesses (f, g) and their forms (a, b, a)
    Wellrounded {
        #[arg(long, allow_hyphen_values = true)]
        disc: Int,
        #[command(flatten)]
        fmt: JsonOpts,
    },
    /// Primes up to a bound admitting a doubly well-rounded pair of the
    /// given discriminant
    EllsForDisc {
        #[arg(long, allow_hyphen_values = true)]
        disc: Int,
        /// Upper bound for the primes
        #[arg(long)]
        max: Int,
        #[command(flatten)]
        fmt: OutputOpts,
    },
    /// Congruence characterization of the admitting primes, when genus
    /// theory suffices
    Congruences {
        #[arg(long, allow_hyphen_values = true)]
        disc: Int,
        #[command(flatten)]
        fmt: JsonOpts,
    },
    /// Per-prime maximum of |D| with the ratio |D| / ell^2
    Scan {
        /// Scan primes up to and including this bound
        #[arg(long = "max-ell")]
        max_ell: Int,
        #[command(flatten)]
        fmt: OutputOpts,
    },
    /// Render a lattice pair as a deterministic SVG
    Figure {
        /// Quadratic form coefficients a,b,c (rationals allowed)
        #[arg(long, allow_hyphen_values = true)]
        gram: String,
        /// Sublattice basis rows h11,h12,h21,h22
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
        /// Prime index of the sublattice
        #[arg(long)]
        ell: Int,
        /// Window radius in units of the sublattice minimal length
        #[arg(long, default_value = "3", allow_hyphen_values = true)]
        window: String,
        /// Skip the two minimal circles
        #[arg(long)]
        no_circles: bool,
        /// Dot radius in pixels
        #[arg(long, default_value_t = 3.0)]
        point_radius: f64,
        /// Write the SVG to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs the CLI: exit 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run(args: &[String]) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, out)) => match write_output(&text, &out) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn write_output(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `"a,b,c"` form coefficients into the Gram matrix
/// `[[a, b/2], [b/2, c]]`.
fn parse_gram(s: &str) -> Result<Gram, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("--gram wants 3 comma-separated coefficients, got `{s}`"));
    }
    let a = parse_rational(parts[0])?;
    let b = parse_rational(parts[1])?;
    let c = parse_rational(parts[2])?;
    Ok(Gram::new(a, b / Rational::from_integer(2), c))
}

fn parse_sub(s: &str) -> Result<[[Int; 2]; 2], String> {
    let parts: Result<Vec<Int>, String> = s
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("invalid integer `{p}` in --sub")))
        .collect();
    let parts = parts?;
    if parts.len() != 4 {
        return Err(format!("--sub wants 4 comma-separated integers, got `{s}`"));
    }
    Ok([[parts[0], parts[1]], [parts[2], parts[3]]])
}

fn core_err(e: tempered_core::Error) -> String {
    e.to_string()
}

fn dispatch(cmd: Command) -> Result<(String, Option<PathBuf>), String> {
    match cmd {
        Command::Classgroup { disc, fmt } => {
            let group = ClassGroup::new(disc).map_err(core_err)?;
            let text = if fmt.csv {
                emit_class_csv(&class_rows(&group))
            } else if fmt.json {
                to_json(&classgroup_json(&group))
            } else {
                class_table(&group)
            };
            Ok((text, fmt.out))
        }
        Command::Temperaments { ell, kind, fmt } => {
            let text = match kind {
                KindArg::TwoAndTwo => {
                    let records = two_two::enumerate(ell).map_err(core_err)?;
                    if fmt.csv {
                        emit_two_two_csv(&records)
                    } else if fmt.json {
                        let rows: Vec<TwoTwoJson> = records.iter().map(Into::into).collect();
                        to_json(&rows)
                    } else {
                        two_two_table(&records)
                    }
                }
                hex => {
                    let records = match hex {
                        KindArg::ThreeAndThree => {
                            three_three(ell).map_err(core_err)?.into_iter().collect()
                        }
                        KindArg::ThreeAndOne => three_one_records(ell).map_err(core_err)?,
                        KindArg::OneAndThree => one_three_records(ell).map_err(core_err)?,
                        KindArg::TwoAndTwo => unreachable!(),
                    };
                    if fmt.csv {
                        emit_hex_csv(&records)
                    } else if fmt.json {
                        let rows: Vec<HexRecordJson> = records.iter().map(Into::into).collect();
                        to_json(&rows)
                    } else {
                        hex_table(&records)
                    }
                }
            };
            Ok((text, fmt.out))
        }
        Command::Verify { gram, sub, ell, fmt } => {
            let pair = PairLattice::new(parse_gram(&gram)?, parse_sub(&sub)?, ell)
                .map_err(core_err)?;
            let c = verifier::classify(&pair);
            let text = if fmt.json {
                to_json(&ClassificationJson::from(&c))
            } else {
                verify_table(&c)
            };
            Ok((text, fmt.out))
        }
        Command::Oracle { ell, fmt } => {
            let rows = verifier::oracle_eisenstein(ell).map_err(core_err)?;
            let text = if fmt.json {
                let out: Vec<OracleRowJson> = rows
                    .iter()
                    .map(|(sub, c)| OracleRowJson {
                        sublattice: sub.matrix(),
                        tempered: c.tempered,
                        s: c.s,
                        s_prime: c.s_prime,
                        tau2: c.tau_squared.into(),
                    })
                    .collect();
                to_json(&out)
            } else {
                oracle_table(&rows)
            };
            Ok((text, fmt.out))
        }
        Command::Genus { disc, fmt } => {
            let group = ClassGroup::new(disc).map_err(core_err)?;
            let text = if fmt.json {
                to_json(&genus_json(&group))
            } else {
                genus_table(&group)
            };
            Ok((text, fmt.out))
        }
        Command::Wellrounded { disc, fmt } => {
            let witnesses = wr_witnesses(disc).map_err(core_err)?;
            let text = if fmt.json {
                let rows: Vec<WitnessJson> = witnesses
                    .iter()
                    .map(|w| WitnessJson { f: w.f, g: w.g, form: (&w.form()).into() })
                    .collect();
                to_json(&rows)
            } else {
                wellrounded_table(disc, &witnesses)
            };
            Ok((text, fmt.out))
        }
        Command::EllsForDisc { disc, max, fmt } => {
            let rows: Vec<EllRow> = two_two::ells_for_disc(disc, max)
                .map_err(core_err)?
                .into_iter()
                .map(|(ell, class_l, class_m)| EllRow { disc, ell, class_l, class_m })
                .collect();
            let text = if fmt.csv {
                emit_ells_csv(&rows)
            } else if fmt.json {
                let out: Vec<EllRowJson> = rows
                    .iter()
                    .map(|r| EllRowJson {
                        disc: r.disc,
                        ell: r.ell,
                        class_l: (&r.class_l).into(),
                        class_m: (&r.class_m).into(),
                    })
                    .collect();
                to_json(&out)
            } else {
                ells_table(&rows)
            };
            Ok((text, fmt.out))
        }
        Command::Congruences { disc, fmt } => {
            let result = two_two::congruence_classes(disc).map_err(core_err)?;
            let text = if fmt.json {
                let json = match &result {
                    None => CongruencesJson {
                        disc,
                        sufficient: false,
                        modulus: None,
                        residue_lists: Vec::new(),
                    },
                    Some((m, lists)) => CongruencesJson {
                        disc,
                        sufficient: true,
                        modulus: Some(*m),
                        residue_lists: lists.clone(),
                    },
                };
                to_json(&json)
            } else {
                congruences_table(disc, &result)
            };
            Ok((text, fmt.out))
        }
        Command::Scan { max_ell, fmt } => {
            let rows = two_two::max_ratio_scan(max_ell).map_err(core_err)?;
            let text = if fmt.csv {
                emit_scan_csv(&rows)
            } else if fmt.json {
                let out: Vec<ScanRowJson> = rows
                    .iter()
                    .map(|r| ScanRowJson { ell: r.ell, disc: r.disc, ratio: r.ratio.into() })
                    .collect();
                to_json(&out)
            } else {
                scan_table(&rows)
            };
            Ok((text, fmt.out))
        }
        Command::Figure { gram, sub, ell, window, no_circles, point_radius, out } => {
            let pair = PairLattice::new(parse_gram(&gram)?, parse_sub(&sub)?, ell)
                .map_err(core_err)?;
            let spec = FigureSpec {
                pair,
                window: parse_rational(&window)?,
                draw_circles: !no_circles,
                point_radius,
            };
            Ok((render_figure(&spec)?, out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_parse_gram_halves_middle_coefficient() {
        let g = parse_gram("391,169,19").unwrap();
        assert_eq!(g.g11, Rational::from_integer(391));
        assert_eq!(g.g12, Rational::new(169, 2));
        assert_eq!(g.g22, Rational::from_integer(19));
        let hexagonal = parse_gram("1,-1,1").unwrap();
        assert_eq!(hexagonal, Gram::hexagonal());
        assert!(parse_gram("1,2").is_err());
        assert!(parse_gram("1,x,3").is_err());
    }

    #[test]
    fn test_parse_sub() {
        assert_eq!(parse_sub("1,0,0,23").unwrap(), [[1, 0], [0, 23]]);
        assert_eq!(parse_sub("1, -4, 0, 2").unwrap(), [[1, -4], [0, 2]]);
        assert!(parse_sub("1,2,3").is_err());
        assert!(parse_sub("a,b,c,d").is_err());
    }

    #[test]
    fn test_dispatch_worked_example() {
        let (text, _) = dispatch(Command::Verify {
            gram: "391,169,19".into(),
            sub: "1,0,0,23".into(),
            ell: 23,
            fmt: JsonOpts { json: false, out: None },
        })
        .unwrap();
        assert!(text.contains("tempered: true"));
        assert!(text.contains("tau2: 391/19"));
        assert!(text.contains("outside_minima: (0,1) (1,-4)"));
        assert!(text.contains("inside_minima: (1,0) (5,-23)"));
    }

    #[test]
    fn test_dispatch_rejects_nonprime_index() {
        let err = dispatch(Command::Verify {
            gram: "1,0,1".into(),
            sub: "1,0,0,6".into(),
            ell: 6,
            fmt: JsonOpts { json: false, out: None },
        })
        .unwrap_err();
        assert!(err.contains("prime"), "{err}");
    }

    #[test]
    fn test_run_exit_codes() {
        let argv = |s: &[&str]| -> Vec<String> { s.iter().map(|x| x.to_string()).collect() };
        assert_eq!(run(&argv(&["tempered", "scan", "--max-ell", "7"])), 0);
        // Domain error: 6 is not prime.
        assert_eq!(
            run(&argv(&["tempered", "oracle", "--ell", "6"])),
            1
        );
        // Usage error: unknown flag.
        assert_eq!(run(&argv(&["tempered", "scan", "--bogus"])), 2);
        // Help is a success.
        assert_eq!(run(&argv(&["tempered", "--help"])), 0);
    }
}
