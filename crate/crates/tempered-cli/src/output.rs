//! Emission and parsing of the CLI's outputs: versioned CSV (every emitter
//! has a parser and round-trips exactly), JSON mirrors of the library types
//! (the core crate stays serialization-free), and plain-text tables.

use serde::Serialize;

use tempered_core::bqf::Form;
use tempered_core::classgroup::{ClassGroup, WrWitness};
use tempered_core::eisenstein::{EisInt, EisSublattice, TemperedKind, TemperedRecord};
use tempered_core::two_two::{ScanRow, TwoTwoRecord};
use tempered_core::verifier::Classification;
use tempered_core::{Int, Rational};

/// Version line prefixed to every CSV document.
pub const CSV_VERSION_HEADER: &str = "# tempered-forms v1";

// ---------------------------------------------------------------------------
// Scalar codecs.
// ---------------------------------------------------------------------------

/// Exact rational as `"p/q"`, or just `"p"` for integers.
pub fn rational_str(r: Rational) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num.parse().map_err(|_| format!("invalid rational `{s}`"))?;
    let d: Int = den.parse().map_err(|_| format!("invalid rational `{s}`"))?;
    if d == 0 {
        return Err(format!("invalid rational `{s}`: zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn parse_int(s: &str) -> Result<Int, String> {
    s.trim().parse().map_err(|_| format!("invalid integer `{s}`"))
}

fn parse_count(s: &str) -> Result<usize, String> {
    s.trim().parse().map_err(|_| format!("invalid count `{s}`"))
}

fn parse_bool(s: &str) -> Result<bool, String> {
    match s.trim() {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(format!("invalid boolean `{other}`")),
    }
}

pub fn form_str(f: &Form) -> String {
    format!("({}, {}, {})", f.a, f.b, f.c)
}

// ---------------------------------------------------------------------------
// CSV plumbing.
// ---------------------------------------------------------------------------

fn csv_document(columns: &str, rows: Vec<String>) -> String {
    let mut out = String::new();
    out.push_str(CSV_VERSION_HEADER);
    out.push('\n');
    out.push_str(columns);
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

/// Strips comments/blank lines, checks the column header, and returns the
/// data rows split into fields.
fn csv_rows<'a>(text: &'a str, columns: &str) -> Result<Vec<Vec<&'a str>>, String> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some(h) if h == columns => {}
        Some(h) => return Err(format!("unexpected CSV header `{h}`, want `{columns}`")),
        None => return Err("empty CSV document".into()),
    }
    Ok(lines.map(|l| l.split(',').map(str::trim).collect()).collect())
}

fn fields_exactly<'a>(row: &'a [&'a str], n: usize) -> Result<&'a [&'a str], String> {
    if row.len() == n {
        Ok(row)
    } else {
        Err(format!("expected {n} fields, found {}: {row:?}", row.len()))
    }
}

// ---------------------------------------------------------------------------
// Hexagonal temperament records (3-and-3, 3-and-1, 1-and-3).
// ---------------------------------------------------------------------------

const HEX_COLUMNS: &str =
    "kind,ell,s,s_prime,tau2_num,tau2_den,witness_x,witness_y,sub_d1,sub_e,sub_d2";

fn kind_name(k: TemperedKind) -> &'static str {
    match k {
        TemperedKind::ThreeThree => "3-and-3",
        TemperedKind::ThreeOne => "3-and-1",
        TemperedKind::OneThree => "1-and-3",
    }
}

fn parse_kind(s: &str) -> Result<TemperedKind, String> {
    match s {
        "3-and-3" => Ok(TemperedKind::ThreeThree),
        "3-and-1" => Ok(TemperedKind::ThreeOne),
        "1-and-3" => Ok(TemperedKind::OneThree),
        other => Err(format!("unknown temperament kind `{other}`")),
    }
}

pub fn emit_hex_csv(records: &[TemperedRecord]) -> String {
    let rows = records
        .iter()
        .map(|r| {
            let m = r.sublattice.matrix();
            debug_assert_eq!(m[1][0], 0, "sublattice matrices are upper triangular");
            format!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                kind_name(r.kind),
                r.ell,
                r.s,
                r.s_prime,
                r.tau_squared.numer(),
                r.tau_squared.denom(),
                r.witness.x,
                r.witness.y,
                m[0][0],
                m[0][1],
                m[1][1],
            )
        })
        .collect();
    csv_document(HEX_COLUMNS, rows)
}

pub fn parse_hex_csv(text: &str) -> Result<Vec<TemperedRecord>, String> {
    csv_rows(text, HEX_COLUMNS)?
        .iter()
        .map(|row| {
            let f = fields_exactly(row, 11)?;
            Ok(TemperedRecord {
                kind: parse_kind(f[0])?,
                ell: parse_int(f[1])?,
                s: parse_count(f[2])?,
                s_prime: parse_count(f[3])?,
                tau_squared: Rational::new(parse_int(f[4])?, parse_int(f[5])?),
                witness: EisInt::new(parse_int(f[6])?, parse_int(f[7])?),
                sublattice: EisSublattice::from_rows([
                    [parse_int(f[8])?, parse_int(f[9])?],
                    [0, parse_int(f[10])?],
                ]),
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// 2-and-2 records.  Both classes are well rounded, so `c = a` is implied.
// ---------------------------------------------------------------------------

const TWO_TWO_COLUMNS: &str = "ell,disc,a_l,b_l,a_m,b_m,tau2_num,tau2_den";

pub fn emit_two_two_csv(records: &[TwoTwoRecord]) -> String {
    let rows = records
        .iter()
        .map(|r| {
            debug_assert_eq!(r.class_l.a, r.class_l.c);
            debug_assert_eq!(r.class_m.a, r.class_m.c);
            format!(
                "{},{},{},{},{},{},{},{}",
                r.ell,
                r.disc,
                r.class_l.a,
                r.class_l.b,
                r.class_m.a,
                r.class_m.b,
                r.tau_squared.numer(),
                r.tau_squared.denom(),
            )
        })
        .collect();
    csv_document(TWO_TWO_COLUMNS, rows)
}

pub fn parse_two_two_csv(text: &str) -> Result<Vec<TwoTwoRecord>, String> {
    csv_rows(text, TWO_TWO_COLUMNS)?
        .iter()
        .map(|row| {
            let f = fields_exactly(row, 8)?;
            let (al, bl) = (parse_int(f[2])?, parse_int(f[3])?);
            let (am, bm) = (parse_int(f[4])?, parse_int(f[5])?);
            Ok(TwoTwoRecord {
                ell: parse_int(f[0])?,
                disc: parse_int(f[1])?,
                class_l: Form::new(al, bl, al).map_err(|e| e.to_string())?,
                class_m: Form::new(am, bm, am).map_err(|e| e.to_string())?,
                tau_squared: Rational::new(parse_int(f[6])?, parse_int(f[7])?),
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Conjecture scan rows.
// ---------------------------------------------------------------------------

const SCAN_COLUMNS: &str = "ell,disc,ratio_num,ratio_den";

pub fn emit_scan_csv(rows: &[ScanRow]) -> String {
    let mut doc = csv_document(
        SCAN_COLUMNS,
        rows.iter()
            .map(|r| {
                format!("{},{},{},{}", r.ell, r.disc, r.ratio.numer(), r.ratio.denom())
            })
            .collect(),
    );
    if let Some(max) = rows.iter().max_by_key(|r| r.ratio) {
        doc.push_str(&format!(
            "# max ratio at ell {}: disc {}, ratio {}\n",
            max.ell,
            max.disc,
            rational_str(max.ratio)
        ));
    }
    doc
}

pub fn parse_scan_csv(text: &str) -> Result<Vec<ScanRow>, String> {
    csv_rows(text, SCAN_COLUMNS)?
        .iter()
        .map(|row| {
            let f = fields_exactly(row, 4)?;
            Ok(ScanRow {
                ell: parse_int(f[0])?,
                disc: parse_int(f[1])?,
                ratio: Rational::new(parse_int(f[2])?, parse_int(f[3])?),
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Class-group rows.
// ---------------------------------------------------------------------------

/// One class as printed by `classgroup`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub form: Form,
    pub order: usize,
    pub ambiguous: bool,
    pub well_rounded: bool,
}

pub fn class_rows(group: &ClassGroup) -> Vec<ClassRow> {
    let ambiguous = group.ambiguous_classes();
    let well_rounded = group.well_rounded_classes();
    group
        .classes()
        .iter()
        .enumerate()
        .map(|(i, &form)| ClassRow {
            form,
            order: group.order_of(i),
            ambiguous: ambiguous.contains(&i),
            well_rounded: well_rounded.contains(&i),
        })
        .collect()
}

const CLASS_COLUMNS: &str = "a,b,c,order,ambiguous,well_rounded";

pub fn emit_class_csv(rows: &[ClassRow]) -> String {
    csv_document(
        CLASS_COLUMNS,
        rows.iter()
            .map(|r| {
                format!(
                    "{},{},{},{},{},{}",
                    r.form.a, r.form.b, r.form.c, r.order, r.ambiguous, r.well_rounded
                )
            })
            .collect(),
    )
}

pub fn parse_class_csv(text: &str) -> Result<Vec<ClassRow>, String> {
    csv_rows(text, CLASS_COLUMNS)?
        .iter()
        .map(|row| {
            let f = fields_exactly(row, 6)?;
            Ok(ClassRow {
                form: Form::new(parse_int(f[0])?, parse_int(f[1])?, parse_int(f[2])?)
                    .map_err(|e| e.to_string())?,
                order: parse_count(f[3])?,
                ambiguous: parse_bool(f[4])?,
                well_rounded: parse_bool(f[5])?,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Admitting-prime rows (`ells-for-disc`).
// ---------------------------------------------------------------------------

/// One admitting prime for a fixed discriminant, with the classes of the
/// first record.  Both classes are well rounded (`c = a`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EllRow {
    pub disc: Int,
    pub ell: Int,
    pub class_l: Form,
    pub class_m: Form,
}

const ELLS_COLUMNS: &str = "disc,ell,a_l,b_l,a_m,b_m";

pub fn emit_ells_csv(rows: &[EllRow]) -> String {
    csv_document(
        ELLS_COLUMNS,
        rows.iter()
            .map(|r| {
                format!(
                    "{},{},{},{},{},{}",
                    r.disc, r.ell, r.class_l.a, r.class_l.b, r.class_m.a, r.class_m.b
                )
            })
            .collect(),
    )
}

pub fn parse_ells_csv(text: &str) -> Result<Vec<EllRow>, String> {
    csv_rows(text, ELLS_COLUMNS)?
        .iter()
        .map(|row| {
            let f = fields_exactly(row, 6)?;
            let (al, bl) = (parse_int(f[2])?, parse_int(f[3])?);
            let (am, bm) = (parse_int(f[4])?, parse_int(f[5])?);
            Ok(EllRow {
                disc: parse_int(f[0])?,
                ell: parse_int(f[1])?,
                class_l: Form::new(al, bl, al).map_err(|e| e.to_string())?,
                class_m: Form::new(am, bm, am).map_err(|e| e.to_string())?,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// JSON mirrors.
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct RatJson {
    pub num: Int,
    pub den: Int,
}

impl From<Rational> for RatJson {
    fn from(r: Rational) -> RatJson {
        RatJson { num: *r.numer(), den: *r.denom() }
    }
}

#[derive(Serialize)]
pub struct FormJson {
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl From<&Form> for FormJson {
    fn from(f: &Form) -> FormJson {
        FormJson { a: f.a, b: f.b, c: f.c }
    }
}

#[derive(Serialize)]
pub struct ClassificationJson {
    pub tempered: bool,
    pub s: usize,
    pub s_prime: usize,
    pub tau2: RatJson,
    pub min_outside: RatJson,
    pub min_inside: RatJson,
    pub outside_minima: Vec<[Int; 2]>,
    pub inside_minima: Vec<[Int; 2]>,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> ClassificationJson {
        ClassificationJson {
            tempered: c.tempered,
            s: c.s,
            s_prime: c.s_prime,
            tau2: c.tau_squared.into(),
            min_outside: c.min_outside.into(),
            min_inside: c.min_inside.into(),
            outside_minima: c.outside_minima.clone(),
            inside_minima: c.inside_minima.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ClassRowJson {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub order: usize,
    pub ambiguous: bool,
    pub well_rounded: bool,
}

#[derive(Serialize)]
pub struct ClassGroupJson {
    pub disc: Int,
    pub class_number: usize,
    pub classes: Vec<ClassRowJson>,
    pub composition: Vec<Vec<usize>>,
    pub genus_partition: Vec<usize>,
}

pub fn classgroup_json(group: &ClassGroup) -> ClassGroupJson {
    let h = group.class_number();
    ClassGroupJson {
        disc: group.discriminant(),
        class_number: h,
        classes: class_rows(group)
            .into_iter()
            .map(|r| ClassRowJson {
                a: r.form.a,
                b: r.form.b,
                c: r.form.c,
                order: r.order,
                ambiguous: r.ambiguous,
                well_rounded: r.well_rounded,
            })
            .collect(),
        composition: (0..h)
            .map(|i| (0..h).map(|j| group.compose(i, j)).collect())
            .collect(),
        genus_partition: group.genus_partition(),
    }
}

#[derive(Serialize)]
pub struct HexRecordJson {
    pub kind: String,
    pub ell: Int,
    pub s: usize,
    pub s_prime: usize,
    pub tau2: RatJson,
    pub witness: [Int; 2],
    pub sublattice: [[Int; 2]; 2],
}

impl From<&TemperedRecord> for HexRecordJson {
    fn from(r: &TemperedRecord) -> HexRecordJson {
        HexRecordJson {
            kind: kind_name(r.kind).into(),
            ell: r.ell,
            s: r.s,
            s_prime: r.s_prime,
            tau2: r.tau_squared.into(),
            witness: [r.witness.x, r.witness.y],
            sublattice: r.sublattice.matrix(),
        }
    }
}

#[derive(Serialize)]
pub struct TwoTwoJson {
    pub ell: Int,
    pub disc: Int,
    pub class_l: FormJson,
    pub class_m: FormJson,
    pub tau2: RatJson,
}

impl From<&TwoTwoRecord> for TwoTwoJson {
    fn from(r: &TwoTwoRecord) -> TwoTwoJson {
        TwoTwoJson {
            ell: r.ell,
            disc: r.disc,
            class_l: (&r.class_l).into(),
            class_m: (&r.class_m).into(),
            tau2: r.tau_squared.into(),
        }
    }
}

#[derive(Serialize)]
pub struct GenusEntryJson {
    pub class: FormJson,
    pub values: Vec<Int>,
}

#[derive(Serialize)]
pub struct GenusJson {
    pub disc: Int,
    pub modulus: Int,
    pub genera: Vec<GenusEntryJson>,
}

pub fn genus_json(group: &ClassGroup) -> GenusJson {
    GenusJson {
        disc: group.discriminant(),
        modulus: -group.discriminant(),
        genera: genus_representatives(group)
            .into_iter()
            .map(|i| GenusEntryJson {
                class: (&group.classes()[i]).into(),
                values: group.genus_values(i),
            })
            .collect(),
    }
}

/// The first class index of each genus, in genus order.
pub fn genus_representatives(group: &ClassGroup) -> Vec<usize> {
    let partition = group.genus_partition();
    let count = partition.iter().max().map_or(0, |m| m + 1);
    (0..count)
        .map(|g| {
            partition
                .iter()
                .position(|&p| p == g)
                .expect("every genus index is attained")
        })
        .collect()
}

#[derive(Serialize)]
pub struct OracleRowJson {
    pub sublattice: [[Int; 2]; 2],
    pub tempered: bool,
    pub s: usize,
    pub s_prime: usize,
    pub tau2: RatJson,
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub f: Int,
    pub g: Int,
    pub form: FormJson,
}

#[derive(Serialize)]
pub struct CongruencesJson {
    pub disc: Int,
    pub sufficient: bool,
    pub modulus: Option<Int>,
    pub residue_lists: Vec<Vec<Int>>,
}

#[derive(Serialize)]
pub struct EllRowJson {
    pub disc: Int,
    pub ell: Int,
    pub class_l: FormJson,
    pub class_m: FormJson,
}

#[derive(Serialize)]
pub struct ScanRowJson {
    pub ell: Int,
    pub disc: Int,
    pub ratio: RatJson,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Plain-text tables.
// ---------------------------------------------------------------------------

pub fn class_table(group: &ClassGroup) -> String {
    let rows = class_rows(group);
    let mut out = format!(
        "discriminant {}\nclass number {}\n",
        group.discriminant(),
        group.class_number()
    );
    out.push_str("idx  form                 order  ambiguous  well-rounded\n");
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&format!(
            "{:<4} {:<20} {:<6} {:<10} {}\n",
            i,
            form_str(&r.form),
            r.order,
            if r.ambiguous { "yes" } else { "no" },
            if r.well_rounded { "yes" } else { "no" },
        ));
    }
    out.push_str("composition table (entry = class index of row * column):\n");
    let h = group.class_number();
    for i in 0..h {
        let line: Vec<String> = (0..h).map(|j| group.compose(i, j).to_string()).collect();
        out.push_str(&format!("  {}\n", line.join(" ")));
    }
    let partition: Vec<String> = group.genus_partition().iter().map(|g| g.to_string()).collect();
    out.push_str(&format!("genus partition: {}\n", partition.join(" ")));
    out
}

pub fn hex_table(records: &[TemperedRecord]) -> String {
    if records.is_empty() {
        return "no temperaments\n".into();
    }
    let mut out = String::from("kind     ell   s  s'  tau^2      witness      sublattice\n");
    for r in records {
        let m = r.sublattice.matrix();
        out.push_str(&format!(
            "{:<8} {:<5} {}  {}   {:<10} {:<12} [[{},{}],[{},{}]]\n",
            kind_name(r.kind),
            r.ell,
            r.s,
            r.s_prime,
            rational_str(r.tau_squared),
            format!("{}", r.witness),
            m[0][0],
            m[0][1],
            m[1][0],
            m[1][1],
        ));
    }
    out
}

pub fn two_two_table(records: &[TwoTwoRecord]) -> String {
    if records.is_empty() {
        return "no temperaments\n".into();
    }
    let mut out = String::from("ell   disc      class_L              class_M              tau^2\n");
    for r in records {
        out.push_str(&format!(
            "{:<5} {:<9} {:<20} {:<20} {}\n",
            r.ell,
            r.disc,
            form_str(&r.class_l),
            form_str(&r.class_m),
            rational_str(r.tau_squared),
        ));
    }
    out
}

pub fn verify_table(c: &Classification) -> String {
    let vecs = |vs: &[[Int; 2]]| {
        vs.iter()
            .map(|v| format!("({},{})", v[0], v[1]))
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "tempered: {}\ns: {}\ns_prime: {}\ntau2: {}\nmin_outside: {}\nmin_inside: {}\noutside_minima: {}\ninside_minima: {}\n",
        c.tempered,
        c.s,
        c.s_prime,
        rational_str(c.tau_squared),
        rational_str(c.min_outside),
        rational_str(c.min_inside),
        vecs(&c.outside_minima),
        vecs(&c.inside_minima),
    )
}

pub fn oracle_table(rows: &[(EisSublattice, Classification)]) -> String {
    let mut out = String::from("sublattice       tempered  s  s'  tau^2\n");
    for (sub, c) in rows {
        let m = sub.matrix();
        out.push_str(&format!(
            "[[{},{}],[{},{}]]  {:<9} {}  {}   {}\n",
            m[0][0],
            m[0][1],
            m[1][0],
            m[1][1],
            c.tempered,
            c.s,
            c.s_prime,
            rational_str(c.tau_squared),
        ));
    }
    out
}

pub fn genus_table(group: &ClassGroup) -> String {
    let mut out = format!(
        "discriminant {}\nmodulus {}\n",
        group.discriminant(),
        -group.discriminant()
    );
    for (g, i) in genus_representatives(group).iter().enumerate() {
        let values: Vec<String> = group.genus_values(*i).iter().map(|v| v.to_string()).collect();
        out.push_str(&format!(
            "genus {} class {}: {}\n",
            g,
            form_str(&group.classes()[*i]),
            values.join(" ")
        ));
    }
    out
}

pub fn wellrounded_table(d: Int, witnesses: &[WrWitness]) -> String {
    let mut out = format!("discriminant {}\n", d);
    if witnesses.is_empty() {
        out.push_str("no well-rounded witnesses\n");
        return out;
    }
    for w in witnesses {
        out.push_str(&format!(
            "witness f={} g={} form {}\n",
            w.f,
            w.g,
            form_str(&w.form())
        ));
    }
    out
}

pub fn ells_table(rows: &[EllRow]) -> String {
    if rows.is_empty() {
        return "no admitting primes in range\n".into();
    }
    let mut out = String::from("ell   disc      class_L              class_M\n");
    for r in rows {
        out.push_str(&format!(
            "{:<5} {:<9} {:<20} {}\n",
            r.ell,
            r.disc,
            form_str(&r.class_l),
            form_str(&r.class_m),
        ));
    }
    out
}

pub fn congruences_table(d: Int, result: &Option<(Int, Vec<Vec<Int>>)>) -> String {
    match result {
        None => format!(
            "discriminant {}\ncongruence conditions are insufficient (a genus contains more than one class)\n",
            d
        ),
        Some((modulus, lists)) => {
            let mut out = format!("discriminant {}\nmodulus {}\n", d, modulus);
            for (i, list) in lists.iter().enumerate() {
                let vals: Vec<String> = list.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("admitting residues {}: {}\n", i, vals.join(" ")));
            }
            out
        }
    }
}

pub fn scan_table(rows: &[ScanRow]) -> String {
    let mut out = String::from("ell   disc      ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{:<5} {:<9} {}\n",
            r.ell,
            r.disc,
            rational_str(r.ratio)
        ));
    }
    if let Some(max) = rows.iter().max_by_key(|r| r.ratio) {
        out.push_str(&format!(
            "max ratio at ell {}: disc {}, ratio {}\n",
            max.ell,
            max.disc,
            rational_str(max.ratio)
        ));
    }
    out
}
