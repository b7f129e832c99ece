//! Parser for the line-oriented record format.
//!
//! A file is a sequence of records separated by blank lines. Each record is a
//! set of `key = value` lines; `#` at the start of a line begins a comment.
//! Values are a number, a range `lo..hi`, or an uncertainty `x+-e`, optionally
//! followed by a unit from a fixed whitelist. See docs/record-format.md for
//! the grammar.

use super::{ExperimentRecord, RecordKind};
use crate::error::{Error, Result};
use crate::matterwave::{MatterWaveRecord, SlitConfig};
use crate::quantities::{constants, Dimension, Interval, Quantity};
use crate::ramsey::RamseyRecord;
use crate::trap::TrapRecord;

/// Physical unit classes a key can require.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum UnitClass {
    Mass,
    Length,
    Angle,
    Frequency,
    Time,
    Energy,
    Momentum,
}

impl UnitClass {
    fn dimension(self) -> Dimension {
        match self {
            UnitClass::Mass => Dimension::MASS,
            UnitClass::Length => Dimension::LENGTH,
            UnitClass::Angle => Dimension::NONE,
            UnitClass::Frequency => Dimension::FREQUENCY,
            UnitClass::Time => Dimension::TIME,
            UnitClass::Energy => Dimension::ENERGY,
            UnitClass::Momentum => Dimension::MOMENTUM,
        }
    }

    fn describe(self) -> &'static str {
        match self {
            UnitClass::Mass => "mass",
            UnitClass::Length => "length",
            UnitClass::Angle => "angle",
            UnitClass::Frequency => "frequency",
            UnitClass::Time => "time",
            UnitClass::Energy => "energy",
            UnitClass::Momentum => "momentum",
        }
    }
}

/// Unit whitelist: symbol, factor to SI, class. Longer symbols are listed
/// first so suffix matching prefers them.
const UNITS: &[(&str, f64, UnitClass)] = &[
    ("kg*m/s", 1.0, UnitClass::Momentum),
    ("urad", 1e-6, UnitClass::Angle),
    ("rad", 1.0, UnitClass::Angle),
    ("GHz", 1e9, UnitClass::Frequency),
    ("THz", 1e12, UnitClass::Frequency),
    ("1/s", 1.0, UnitClass::Frequency),
    ("Hz", 1.0, UnitClass::Frequency),
    ("a0", constants::BOHR_RADIUS, UnitClass::Length),
    ("eV", constants::ELECTRON_VOLT, UnitClass::Energy),
    ("pm", 1e-12, UnitClass::Length),
    ("nm", 1e-9, UnitClass::Length),
    ("um", 1e-6, UnitClass::Length),
    ("ms", 1e-3, UnitClass::Time),
    ("kg", 1.0, UnitClass::Mass),
    ("J", 1.0, UnitClass::Energy),
    ("m", 1.0, UnitClass::Length),
    ("s", 1.0, UnitClass::Time),
    ("u", constants::ATOMIC_MASS, UnitClass::Mass),
];

fn unit_info(symbol: &str) -> Option<(f64, UnitClass)> {
    UNITS
        .iter()
        .find(|(s, _, _)| *s == symbol)
        .map(|&(_, factor, class)| (factor, class))
}

/// Numeric part of a value before unit conversion.
#[derive(Clone, Copy, Debug)]
enum RawNumber {
    Scalar(f64),
    Range(f64, f64),
    Uncertain(f64, f64),
}

fn parse_f64(s: &str, line: usize) -> Result<f64> {
    let v: f64 = s
        .parse()
        .map_err(|_| Error::parse(line, format!("`{s}` is not a number")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("`{s}` is not finite")));
    }
    Ok(v)
}

fn parse_raw_number(s: &str, line: usize) -> Result<RawNumber> {
    if let Some((lo, hi)) = s.split_once("..") {
        return Ok(RawNumber::Range(parse_f64(lo, line)?, parse_f64(hi, line)?));
    }
    if let Some((central, err)) = s.split_once("+-") {
        return Ok(RawNumber::Uncertain(
            parse_f64(central, line)?,
            parse_f64(err, line)?,
        ));
    }
    parse_f64(s, line).map(RawNumber::Scalar)
}

/// Splits a value into its numeric part and optional unit symbol. The unit is
/// either separated by whitespace (`1901+-70 pm`) or attached (`50pm`).
fn split_value(s: &str, line: usize) -> Result<(&str, Option<&str>)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse(line, "empty value"));
    }
    let mut parts = s.split_whitespace();
    let first = parts.next().unwrap();
    if let Some(second) = parts.next() {
        if parts.next().is_some() {
            return Err(Error::parse(
                line,
                format!("expected `number [unit]`, got `{s}`"),
            ));
        }
        return Ok((first, Some(second)));
    }
    // Single token: try an attached unit suffix, longest symbols first.
    for (symbol, _, _) in UNITS {
        if let Some(prefix) = first.strip_suffix(symbol) {
            if !prefix.is_empty() && parse_raw_number(prefix, line).is_ok() {
                return Ok((prefix, Some(symbol)));
            }
        }
    }
    Ok((first, None))
}

struct ParsedValue {
    number: RawNumber,
    unit: Option<(f64, UnitClass)>,
}

fn parse_value(raw: &str, line: usize) -> Result<ParsedValue> {
    let (number_part, unit_part) = split_value(raw, line)?;
    let number = parse_raw_number(number_part, line)?;
    let unit = match unit_part {
        Some(symbol) => Some(
            unit_info(symbol)
                .ok_or_else(|| Error::unit(line, format!("unknown unit `{symbol}`")))?,
        ),
        None => None,
    };
    Ok(ParsedValue { number, unit })
}

fn expect_unit(value: &ParsedValue, key: &str, class: UnitClass, line: usize) -> Result<f64> {
    match value.unit {
        Some((factor, actual)) if actual == class => Ok(factor),
        Some((_, actual)) => Err(Error::unit(
            line,
            format!(
                "key `{key}` expects a {} unit, got a {} unit",
                class.describe(),
                actual.describe()
            ),
        )),
        None => Err(Error::unit(
            line,
            format!("key `{key}` requires a {} unit", class.describe()),
        )),
    }
}

fn scalar_from(value: &ParsedValue, key: &str, line: usize) -> Result<f64> {
    match value.number {
        RawNumber::Scalar(v) => Ok(v),
        _ => Err(Error::validation(
            line,
            key,
            "expected a single value, not a range",
        )),
    }
}

fn quantity_from(
    value: &ParsedValue,
    key: &str,
    class: UnitClass,
    line: usize,
) -> Result<Quantity> {
    let factor = expect_unit(value, key, class, line)?;
    let v = scalar_from(value, key, line)?;
    Ok(Quantity::new(v * factor, class.dimension()))
}

fn interval_from(
    value: &ParsedValue,
    key: &str,
    factor: f64,
    dim: Dimension,
    line: usize,
) -> Result<Interval> {
    let (lo, hi) = match value.number {
        RawNumber::Scalar(v) => (v, v),
        RawNumber::Range(lo, hi) => (lo, hi),
        RawNumber::Uncertain(central, err) => {
            if err < 0.0 {
                return Err(Error::validation(
                    line,
                    key,
                    format!("uncertainty must be non-negative, got {err:e}"),
                ));
            }
            (central - err, central + err)
        }
    };
    if lo > hi {
        return Err(Error::validation(
            line,
            key,
            format!("interval endpoints inverted: {lo:e} > {hi:e}"),
        ));
    }
    Interval::new(
        Quantity::new(lo * factor, dim),
        Quantity::new(hi * factor, dim),
    )
}

fn positive_interval(interval: Interval, key: &str, line: usize) -> Result<Interval> {
    if interval.lo().value() <= 0.0 {
        return Err(Error::validation(
            line,
            key,
            format!("must be positive, got {:e}", interval.lo().value()),
        ));
    }
    Ok(interval)
}

fn positive_quantity(q: Quantity, key: &str, line: usize) -> Result<Quantity> {
    if q.value() <= 0.0 {
        return Err(Error::validation(
            line,
            key,
            format!("must be positive, got {:e}", q.value()),
        ));
    }
    Ok(q)
}

/// One `key = value` line inside a record block.
struct Field {
    key: String,
    value: String,
    line: usize,
}

struct Block {
    fields: Vec<Field>,
    start_line: usize,
}

impl Block {
    fn take(&mut self, key: &str) -> Option<Field> {
        let index = self.fields.iter().position(|f| f.key == key)?;
        Some(self.fields.remove(index))
    }

    fn require(&mut self, key: &str) -> Result<Field> {
        self.take(key)
            .ok_or_else(|| Error::validation(self.start_line, key, "required key is missing"))
    }

    fn take_quantity(&mut self, key: &str, class: UnitClass) -> Result<Option<Quantity>> {
        match self.take(key) {
            Some(field) => {
                let value = parse_value(&field.value, field.line)?;
                let q = quantity_from(&value, key, class, field.line)?;
                Ok(Some(positive_quantity(q, key, field.line)?))
            }
            None => Ok(None),
        }
    }

    fn require_quantity(&mut self, key: &str, class: UnitClass) -> Result<Quantity> {
        let field = self.require(key)?;
        let value = parse_value(&field.value, field.line)?;
        let q = quantity_from(&value, key, class, field.line)?;
        positive_quantity(q, key, field.line)
    }

    fn require_interval(&mut self, key: &str, class: UnitClass) -> Result<Interval> {
        let field = self.require(key)?;
        let value = parse_value(&field.value, field.line)?;
        let factor = expect_unit(&value, key, class, field.line)?;
        let interval = interval_from(&value, key, factor, class.dimension(), field.line)?;
        positive_interval(interval, key, field.line)
    }

    /// Dimensionless value (no unit allowed), as an interval.
    fn take_bare_interval(&mut self, key: &str) -> Result<Option<Interval>> {
        match self.take(key) {
            Some(field) => {
                let value = parse_value(&field.value, field.line)?;
                if value.unit.is_some() {
                    return Err(Error::unit(
                        field.line,
                        format!("key `{key}` takes no unit"),
                    ));
                }
                let interval = interval_from(&value, key, 1.0, Dimension::NONE, field.line)?;
                Ok(Some(positive_interval(interval, key, field.line)?))
            }
            None => Ok(None),
        }
    }

    fn require_integer(&mut self, key: &str) -> Result<(i64, usize)> {
        let field = self.require(key)?;
        let v: i64 = field.value.trim().parse().map_err(|_| {
            Error::parse(
                field.line,
                format!("`{}` is not an integer", field.value.trim()),
            )
        })?;
        Ok((v, field.line))
    }

    fn finish(self, kind: &str) -> Result<()> {
        if let Some(field) = self.fields.first() {
            return Err(Error::parse(
                field.line,
                format!("unknown key `{}` for kind `{kind}`", field.key),
            ));
        }
        Ok(())
    }
}

fn parse_geometry_with_width(block: &mut Block, width: Quantity) -> Result<Option<SlitConfig>> {
    let Some(field) = block.take("geometry") else {
        return Ok(None);
    };
    let shape = field.value.trim().to_string();
    let config = match shape.as_str() {
        "single" => SlitConfig::Single {
            width,
            source_distance: block.require_quantity("source_distance", UnitClass::Length)?,
        },
        "double" => SlitConfig::Double {
            width,
            separation: block.require_quantity("separation", UnitClass::Length)?,
            collimator_width: block.require_quantity("collimator", UnitClass::Length)?,
            collimator_distance: block
                .require_quantity("collimator_distance", UnitClass::Length)?,
        },
        "multi" => {
            let (count, count_line) = block.require_integer("slit_count")?;
            if !(3..=u32::MAX as i64).contains(&count) {
                return Err(Error::validation(
                    count_line,
                    "slit_count",
                    format!("must be an integer >= 3, got {count}"),
                ));
            }
            SlitConfig::Multi {
                count: count as u32,
                width,
                period: block.require_quantity("separation", UnitClass::Length)?,
                source_distance: block.require_quantity("source_distance", UnitClass::Length)?,
            }
        }
        other => {
            return Err(Error::parse(
                field.line,
                format!("geometry must be single, double, or multi, got `{other}`"),
            ))
        }
    };
    config
        .validate()
        .map_err(|e| Error::validation(field.line, "geometry", e.to_string()))?;
    Ok(Some(config))
}

fn parse_ramsey(block: &mut Block) -> Result<RecordKind> {
    let hyperfine_splitting = block.require_quantity("nu0", UnitClass::Frequency)?;
    let transition_frequency = block.require_quantity("nu_s", UnitClass::Frequency)?;
    let system_size = block.take_quantity("r_s", UnitClass::Length)?;
    let einstein_a = block.take_quantity("einstein_a", UnitClass::Frequency)?;
    if system_size.is_none() && einstein_a.is_none() {
        return Err(Error::validation(
            block.start_line,
            "r_s",
            "either `r_s` or `einstein_a` is required",
        ));
    }
    let coherence_time = block.require_quantity("t", UnitClass::Time)?;
    let published_beta = match block.take_bare_interval("beta")? {
        Some(interval) if interval.is_degenerate() => Some(interval.lo().value()),
        Some(_) => {
            return Err(Error::validation(
                block.start_line,
                "beta",
                "published beta for a ramsey record must be a single value",
            ))
        }
        None => None,
    };
    Ok(RecordKind::Ramsey(RamseyRecord {
        hyperfine_splitting,
        transition_frequency,
        system_size,
        einstein_a,
        coherence_time,
        published_beta,
    }))
}

fn parse_trap(block: &mut Block) -> Result<RecordKind> {
    Ok(RecordKind::Trap(TrapRecord {
        energy: block.require_quantity("energy", UnitClass::Energy)?,
        separation: block.require_quantity("separation", UnitClass::Length)?,
    }))
}

fn parse_block(mut block: Block) -> Result<ExperimentRecord> {
    // Reject duplicate keys up front so `take` semantics stay unambiguous.
    for (i, field) in block.fields.iter().enumerate() {
        if let Some(dup) = block.fields[..i].iter().find(|f| f.key == field.key) {
            return Err(Error::parse(
                field.line,
                format!(
                    "duplicate key `{}` (first given at line {})",
                    field.key, dup.line
                ),
            ));
        }
    }

    let kind_field = block.require("kind")?;
    let label_field = block.require("label")?;
    let label = label_field.value.trim().to_string();
    if label.is_empty() {
        return Err(Error::validation(
            label_field.line,
            "label",
            "must be non-empty",
        ));
    }
    let citation_field = block.require("citation")?;
    let citation = citation_field.value.trim().to_string();
    if citation.is_empty() {
        return Err(Error::validation(
            citation_field.line,
            "citation",
            "must be non-empty",
        ));
    }
    let (year, year_line) = block.require_integer("year")?;
    if !(1901..=2099).contains(&year) {
        return Err(Error::validation(
            year_line,
            "year",
            format!("must lie in 1901..=2099, got {year}"),
        ));
    }
    let note = block.take("note").map(|f| f.value.trim().to_string());

    let kind_name = kind_field.value.trim().to_string();
    let kind = match kind_name.as_str() {
        "matterwave" => {
            let mass = block.require_quantity("mass", UnitClass::Mass)?;
            let wavelength = block.require_interval("lambda", UnitClass::Length)?;
            let slit_width = block.require_quantity("d", UnitClass::Length)?;
            let theta = block.take_quantity("theta", UnitClass::Angle)?;
            let geometry = parse_geometry_with_width(&mut block, slit_width)?;
            if theta.is_none() && geometry.is_none() {
                return Err(Error::validation(
                    block.start_line,
                    "theta",
                    "either `theta` or a `geometry` block is required",
                ));
            }
            let published_beta = block.take_bare_interval("beta")?;
            RecordKind::MatterWave(MatterWaveRecord {
                mass,
                wavelength,
                slit_width,
                geometry,
                theta,
                published_beta,
            })
        }
        "ramsey" => parse_ramsey(&mut block)?,
        "trap" => parse_trap(&mut block)?,
        other => {
            return Err(Error::parse(
                kind_field.line,
                format!("kind must be matterwave, ramsey, or trap, got `{other}`"),
            ))
        }
    };

    block.finish(&kind_name)?;
    let record = ExperimentRecord {
        label,
        citation,
        year: year as i32,
        note,
        kind,
    };
    validate_record(&record)?;
    Ok(record)
}

fn validate_record(record: &ExperimentRecord) -> Result<()> {
    match &record.kind {
        RecordKind::MatterWave(mw) => mw.validate(),
        RecordKind::Ramsey(r) => r.validate(),
        RecordKind::Trap(t) => t.validate(),
    }
}

/// Parses a whole file of records. Returns the first error with its line and
/// field context.
pub fn parse_records(input: &str) -> Result<Vec<ExperimentRecord>> {
    let mut records = Vec::new();
    let mut fields: Vec<Field> = Vec::new();
    let mut start_line = 0usize;

    for (index, raw_line) in input.lines().enumerate() {
        let line_no = index + 1;
        let line = raw_line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !fields.is_empty() {
                records.push(parse_block(Block {
                    fields: std::mem::take(&mut fields),
                    start_line,
                })?);
            }
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::parse(
                line_no,
                format!("expected `key = value`, got `{line}`"),
            ));
        };
        let key = key.trim().to_string();
        if key.is_empty()
            || !key
                .chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        {
            return Err(Error::parse(
                line_no,
                format!("key `{key}` must be lower_snake_case"),
            ));
        }
        if fields.is_empty() {
            start_line = line_no;
        }
        fields.push(Field {
            key,
            value: value.trim().to_string(),
            line: line_no,
        });
    }
    if !fields.is_empty() {
        records.push(parse_block(Block { fields, start_line })?);
    }
    Ok(records)
}

/// Key policy shared by the CLI parameter parsers: expected unit class per
/// key, `None` meaning a bare dimensionless number.
fn argument_class(key: &str) -> Result<Option<UnitClass>> {
    Ok(match key {
        "mass" => Some(UnitClass::Mass),
        "lambda"
        | "d"
        | "r_s"
        | "separation"
        | "collimator"
        | "collimator_distance"
        | "source_distance"
        | "l" => Some(UnitClass::Length),
        "theta" => Some(UnitClass::Angle),
        "nu0" | "nu_s" | "nu" | "einstein_a" => Some(UnitClass::Frequency),
        "t" | "tau" => Some(UnitClass::Time),
        "e" | "energy" => Some(UnitClass::Energy),
        "p" => Some(UnitClass::Momentum),
        "n_max" | "slit_count" => None,
        other => {
            return Err(Error::MissingParameter(format!(
                "unknown parameter `{other}`"
            )))
        }
    })
}

/// Parses one `value[unit]` CLI argument for `key` into a single quantity.
pub fn parse_scalar_argument(key: &str, raw: &str) -> Result<Quantity> {
    let class = argument_class(key)?;
    let value = parse_value(raw, 0)?;
    match class {
        Some(class) => quantity_from(&value, key, class, 0),
        None => {
            if value.unit.is_some() {
                return Err(Error::unit(0, format!("key `{key}` takes no unit")));
            }
            Ok(Quantity::dimensionless(scalar_from(&value, key, 0)?))
        }
    }
}

/// Parses one `value[unit]` CLI argument for `key` into an interval
/// (accepts ranges and `+-` uncertainties).
pub fn parse_interval_argument(key: &str, raw: &str) -> Result<Interval> {
    let class = argument_class(key)?;
    let value = parse_value(raw, 0)?;
    match class {
        Some(class) => {
            let factor = expect_unit(&value, key, class, 0)?;
            interval_from(&value, key, factor, class.dimension(), 0)
        }
        None => {
            if value.unit.is_some() {
                return Err(Error::unit(0, format!("key `{key}` takes no unit")));
            }
            interval_from(&value, key, 1.0, Dimension::NONE, 0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NEUTRON: &str = "\
kind = matterwave
label = Neutron
citation = 1988neutron
year = 1988
mass = 1 u
lambda = 1901+-70 pm
d = 96 um
theta = 15.2 urad
beta = 0.60+-0.02
";

    #[test]
    fn parses_single_record() {
        let records = parse_records(NEUTRON).unwrap();
        assert_eq!(records.len(), 1);
        let record = &records[0];
        assert_eq!(record.label, "Neutron");
        assert_eq!(record.year, 1988);
        let RecordKind::MatterWave(mw) = &record.kind else {
            panic!("expected a matter-wave record");
        };
        assert!(((mw.mass.value() - 1.66053906660e-27) / 1.66053906660e-27).abs() < 1e-12);
        assert!((mw.wavelength.lo().value() - 1831e-12).abs() < 1e-24);
        assert!((mw.wavelength.hi().value() - 1971e-12).abs() < 1e-24);
        assert!((mw.slit_width.value() - 96e-6).abs() < 1e-18);
        assert!((mw.theta.unwrap().value() - 15.2e-6).abs() < 1e-18);
        let published = mw.published_beta.unwrap();
        assert!((published.lo().value() - 0.58).abs() < 1e-12);
        assert!((published.hi().value() - 0.62).abs() < 1e-12);
    }

    #[test]
    fn empty_input_gives_no_records() {
        assert!(parse_records("").unwrap().is_empty());
        assert!(parse_records("\n# only a comment\n\n").unwrap().is_empty());
    }

    #[test]
    fn negative_wavelength_is_a_validation_error() {
        let text = NEUTRON.replace("lambda = 1901+-70 pm", "lambda = -1 pm");
        let err = parse_records(&text).unwrap_err();
        match err {
            Error::Validation { line, field, .. } => {
                assert_eq!(field, "lambda");
                assert_eq!(line, 6);
            }
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_unit_is_a_unit_error() {
        let text = NEUTRON.replace("d = 96 um", "d = 96 furlong");
        assert!(matches!(parse_records(&text), Err(Error::Unit { .. })));
    }

    #[test]
    fn wrong_unit_class_is_a_unit_error() {
        let text = NEUTRON.replace("d = 96 um", "d = 96 ms");
        let err = parse_records(&text).unwrap_err();
        assert!(matches!(err, Error::Unit { line: 7, .. }), "{err:?}");
    }

    #[test]
    fn missing_key_names_the_field() {
        let text = NEUTRON.replace("theta = 15.2 urad\n", "");
        let err = parse_records(&text).unwrap_err();
        assert!(matches!(err, Error::Validation { ref field, .. } if field == "theta"));
    }

    #[test]
    fn duplicate_key_rejected() {
        let text = format!("{NEUTRON}d = 96 um\n");
        assert!(matches!(parse_records(&text), Err(Error::Parse { .. })));
    }

    #[test]
    fn year_bounds_enforced() {
        let text = NEUTRON.replace("year = 1988", "year = 1900");
        assert!(matches!(
            parse_records(&text),
            Err(Error::Validation { ref field, .. }) if field == "year"
        ));
    }

    #[test]
    fn ramsey_block_parses() {
        let text = "\
kind = ramsey
label = 87Rb
citation = 2013Rb
year = 2013
nu0 = 6.8 GHz
nu_s = 377 THz
r_s = 5.2 a0
t = 2.3 s
beta = 370
";
        let records = parse_records(text).unwrap();
        let RecordKind::Ramsey(r) = &records[0].kind else {
            panic!("expected a ramsey record");
        };
        assert_eq!(r.hyperfine_splitting.value(), 6.8e9);
        assert_eq!(r.transition_frequency.value(), 3.77e14);
        assert!((r.system_size.unwrap().value() - 5.2 * constants::BOHR_RADIUS).abs() < 1e-21);
        assert_eq!(r.coherence_time.value(), 2.3);
        assert_eq!(r.published_beta, Some(370.0));
    }

    #[test]
    fn geometry_block_parses() {
        let text = "\
kind = matterwave
label = Bench
citation = bench
year = 2000
mass = 1 u
lambda = 500 pm
d = 0.5 um
geometry = double
separation = 2 um
collimator = 1 um
collimator_distance = 1 m
";
        let records = parse_records(text).unwrap();
        let RecordKind::MatterWave(mw) = &records[0].kind else {
            panic!("expected a matter-wave record");
        };
        let Some(SlitConfig::Double { separation, .. }) = mw.geometry else {
            panic!("expected double-slit geometry");
        };
        assert_eq!(separation.value(), 2e-6);
    }

    #[test]
    fn several_records_separated_by_blank_lines() {
        let text = format!(
            "{NEUTRON}\n\
kind = trap\n\
label = Bench trap\n\
citation = bench\n\
year = 2024\n\
energy = 1 eV\n\
separation = 2.480 um\n"
        );
        let records = parse_records(&text).unwrap();
        assert_eq!(records.len(), 2);
        assert!(matches!(records[1].kind, RecordKind::Trap(_)));
    }

    #[test]
    fn attached_units_in_arguments() {
        let q = parse_scalar_argument("lambda", "50pm").unwrap();
        assert_eq!(q.value(), 50e-12);
        let q = parse_scalar_argument("theta", "0.58urad").unwrap();
        assert!((q.value() - 0.58e-6).abs() < 1e-18);
        let q = parse_scalar_argument("t", "600ms").unwrap();
        assert_eq!(q.value(), 0.6);
        let q = parse_scalar_argument("r_s", "5.2a0").unwrap();
        assert!((q.value() - 5.2 * constants::BOHR_RADIUS).abs() < 1e-21);
        let q = parse_scalar_argument("p", "1.3e-23kg*m/s").unwrap();
        assert_eq!(q.dim(), Dimension::MOMENTUM);
        let band = parse_interval_argument("lambda", "1.9..3.6pm").unwrap();
        assert_eq!(band.lo().value(), 1.9e-12);
        assert_eq!(band.hi().value(), 3.6e-12);
    }
}
