//! Open Location Code (plus code) encoding and decoding.
//!
//! Charger locations scraped from map data arrive as plus codes; this module
//! converts them to coordinates. Digits are base-20 over the alphabet
//! `23456789CFGHJMPQRVWX`: five digit pairs refine latitude/longitude down
//! to 1/8000 degree, further digits refine a 4x5 grid. Arithmetic is done in
//! integer units (1/25 000 000 degree latitude, 1/8 192 000 degree
//! longitude) so decoded centers are correctly rounded with a single float
//! division.

use alloc::string::String;
use alloc::vec::Vec;

use crate::geo::GeoPoint;

pub const ALPHABET: &[u8; 20] = b"23456789CFGHJMPQRVWX";
pub const SEPARATOR: char = '+';
pub const PADDING: char = '0';
/// Digit count resolved by pairs; beyond this, single digits refine a grid.
pub const PAIR_DIGITS: usize = 10;
pub const MAX_DIGITS: usize = 15;

// Integer units per degree at full 15-digit precision.
const LAT_UNITS_PER_DEG: i64 = 8000 * 3125;
const LNG_UNITS_PER_DEG: i64 = 8000 * 1024;

// Per-digit cell sizes in integer units: five pair levels, five grid levels.
const LAT_RES: [i64; 10] = [
    20 * LAT_UNITS_PER_DEG,
    LAT_UNITS_PER_DEG,
    LAT_UNITS_PER_DEG / 20,
    LAT_UNITS_PER_DEG / 400,
    LAT_UNITS_PER_DEG / 8000,
    625,
    125,
    25,
    5,
    1,
];
const LNG_RES: [i64; 10] = [
    20 * LNG_UNITS_PER_DEG,
    LNG_UNITS_PER_DEG,
    LNG_UNITS_PER_DEG / 20,
    LNG_UNITS_PER_DEG / 400,
    LNG_UNITS_PER_DEG / 8000,
    256,
    64,
    16,
    4,
    1,
];

const GRID_COLS: i64 = 4;
const GRID_ROWS: i64 = 5;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OlcError {
    #[error("code contains no '+' separator")]
    MissingSeparator,
    #[error("'+' separator at character {0}, expected after 8 digits")]
    MisplacedSeparator(usize),
    #[error("short code (separator after {digits} digits) cannot be decoded without a reference location")]
    ShortCodeWithoutReference { digits: usize },
    #[error("invalid character {ch:?} at position {position}")]
    InvalidCharacter { ch: char, position: usize },
    #[error("invalid padding at position {0}: padding must fill to the separator and end the code")]
    InvalidPadding(usize),
    #[error("invalid code length: {0}")]
    InvalidLength(usize),
}

/// A decoded plus-code cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CodeArea {
    pub south: f64,
    pub west: f64,
    pub north: f64,
    pub east: f64,
    /// Number of significant digits the code carried (padding excluded).
    pub code_length: usize,
}

impl CodeArea {
    pub fn center(&self) -> GeoPoint {
        GeoPoint {
            lat: 0.5 * (self.south + self.north),
            lon: 0.5 * (self.west + self.east),
        }
    }
}

fn digit_value(ch: char) -> Option<i64> {
    let up = ch.to_ascii_uppercase() as u8;
    ALPHABET.iter().position(|&a| a == up).map(|v| v as i64)
}

/// Validates a full code and returns its significant digits (padding and
/// separator stripped, uppercased).
fn significant_digits(code: &str) -> Result<Vec<i64>, OlcError> {
    let mut digits = Vec::new();
    let mut sep_at: Option<usize> = None;
    let mut pad_at: Option<usize> = None;
    let mut chars_seen = 0usize;

    for (pos, ch) in code.chars().enumerate() {
        chars_seen = pos + 1;
        if ch == SEPARATOR {
            if sep_at.is_some() {
                return Err(OlcError::MisplacedSeparator(pos));
            }
            sep_at = Some(pos);
            continue;
        }
        if sep_at.is_some() && pad_at.is_some() {
            // nothing may follow a padded section's separator
            return Err(OlcError::InvalidPadding(pos));
        }
        if ch == PADDING {
            if sep_at.is_some() {
                return Err(OlcError::InvalidPadding(pos));
            }
            if pad_at.is_none() {
                // padding starts only at an even digit position >= 2
                if pos < 2 || pos % 2 != 0 {
                    return Err(OlcError::InvalidPadding(pos));
                }
                pad_at = Some(pos);
            }
            continue;
        }
        if pad_at.is_some() && sep_at.is_none() {
            // a real digit after padding began
            return Err(OlcError::InvalidPadding(pos));
        }
        match digit_value(ch) {
            Some(v) => {
                if digits.len() < MAX_DIGITS {
                    digits.push(v);
                }
            }
            None => return Err(OlcError::InvalidCharacter { ch, position: pos }),
        }
    }

    let sep = sep_at.ok_or(OlcError::MissingSeparator)?;
    if sep < 8 {
        if sep % 2 != 0 {
            return Err(OlcError::MisplacedSeparator(sep));
        }
        return Err(OlcError::ShortCodeWithoutReference { digits: sep });
    }
    if sep > 8 {
        return Err(OlcError::MisplacedSeparator(sep));
    }
    if let Some(p) = pad_at {
        // padded codes end exactly at the separator
        if chars_seen != sep + 1 {
            return Err(OlcError::InvalidPadding(p));
        }
    }
    // exactly one trailing digit after the separator is not decodable
    let after = chars_seen.saturating_sub(sep + 1);
    if after == 1 {
        return Err(OlcError::InvalidLength(chars_seen));
    }
    Ok(digits)
}

/// Accumulated integer cell origin and size for a digit sequence.
fn cell_units(digits: &[i64]) -> (i64, i64, i64, i64) {
    let mut lat_units = -90 * LAT_UNITS_PER_DEG;
    let mut lng_units = -180 * LNG_UNITS_PER_DEG;
    let mut lat_size = LAT_RES[0];
    let mut lng_size = LNG_RES[0];

    let pair_count = digits.len().min(PAIR_DIGITS);
    for (k, &d) in digits[..pair_count].iter().enumerate() {
        let level = k / 2;
        if k % 2 == 0 {
            lat_units += d * LAT_RES[level];
            lat_size = LAT_RES[level];
        } else {
            lng_units += d * LNG_RES[level];
            lng_size = LNG_RES[level];
        }
    }
    for (g, &d) in digits.iter().skip(PAIR_DIGITS).enumerate() {
        let level = 5 + g;
        lat_units += (d / GRID_COLS) * LAT_RES[level];
        lng_units += (d % GRID_COLS) * LNG_RES[level];
        lat_size = LAT_RES[level];
        lng_size = LNG_RES[level];
    }
    (lat_units, lng_units, lat_size, lng_size)
}

/// Decodes a full plus code into its cell.
pub fn decode(code: &str) -> Result<CodeArea, OlcError> {
    let digits = significant_digits(code)?;
    let (lat_units, lng_units, lat_size, lng_size) = cell_units(&digits);

    Ok(CodeArea {
        south: lat_units as f64 / LAT_UNITS_PER_DEG as f64,
        west: lng_units as f64 / LNG_UNITS_PER_DEG as f64,
        north: (lat_units + lat_size) as f64 / LAT_UNITS_PER_DEG as f64,
        east: (lng_units + lng_size) as f64 / LNG_UNITS_PER_DEG as f64,
        code_length: digits.len(),
    })
}

/// Decodes a full plus code to the center of its cell.
pub fn decode_plus_code(code: &str) -> Result<GeoPoint, OlcError> {
    let digits = significant_digits(code)?;
    let (lat_units, lng_units, lat_size, lng_size) = cell_units(&digits);

    // Single correctly-rounded division: the numerator is an exact integer.
    Ok(GeoPoint {
        lat: (2 * lat_units + lat_size) as f64 / (2 * LAT_UNITS_PER_DEG) as f64,
        lon: (2 * lng_units + lng_size) as f64 / (2 * LNG_UNITS_PER_DEG) as f64,
    })
}

/// Encodes a coordinate as a full plus code with `code_length` digits.
///
/// Valid lengths are 2, 4, 6, 8, 10, and 11..=15. Latitude is clipped to
/// [-90, 90]; longitude is normalized into [-180, 180).
pub fn encode(lat: f64, lon: f64, code_length: usize) -> Result<String, OlcError> {
    let valid =
        matches!(code_length, 2 | 4 | 6 | 8 | 10) || (11..=MAX_DIGITS).contains(&code_length);
    if !valid {
        return Err(OlcError::InvalidLength(code_length));
    }

    let lat = lat.clamp(-90.0, 90.0);
    let mut lon = lon;
    while lon >= 180.0 {
        lon -= 360.0;
    }
    while lon < -180.0 {
        lon += 360.0;
    }

    let mut lat_units =
        libm::floor(lat * LAT_UNITS_PER_DEG as f64) as i64 + 90 * LAT_UNITS_PER_DEG;
    let mut lng_units =
        libm::floor(lon * LNG_UNITS_PER_DEG as f64) as i64 + 180 * LNG_UNITS_PER_DEG;
    lat_units = lat_units.clamp(0, 180 * LAT_UNITS_PER_DEG - 1);
    lng_units = lng_units.clamp(0, 360 * LNG_UNITS_PER_DEG - 1);

    // extract the full 15 digits least-significant first, then truncate
    let mut grid = [0u8; 5];
    for slot in grid.iter_mut().rev() {
        let row = lat_units % GRID_ROWS;
        let col = lng_units % GRID_COLS;
        *slot = ALPHABET[(row * GRID_COLS + col) as usize];
        lat_units /= GRID_ROWS;
        lng_units /= GRID_COLS;
    }
    let mut pairs = [0u8; 10];
    for level in (0..5).rev() {
        pairs[2 * level] = ALPHABET[(lat_units % 20) as usize];
        pairs[2 * level + 1] = ALPHABET[(lng_units % 20) as usize];
        lat_units /= 20;
        lng_units /= 20;
    }

    let mut full = Vec::with_capacity(MAX_DIGITS + 1);
    full.extend_from_slice(&pairs);
    full.extend_from_slice(&grid);
    full.truncate(code_length);
    while full.len() < 8 {
        full.push(PADDING as u8);
    }
    full.insert(8, SEPARATOR as u8);

    Ok(String::from_utf8(full).expect("alphabet is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Centers from an independent implementation of the published OLC
    // algorithm (exact rational arithmetic, converted once to f64).
    const VECTORS: &[(&str, f64, f64)] = &[
        ("8FVC2222+22", 47.0000625, 8.0000625),
        ("22222222+", -89.99875, -179.99875),
        ("7FG49Q00+", 20.375, 2.775),
        ("8FVC2GGG+GG", 47.0263125, 8.5263125),
        ("849VCWC8+Q4", 37.4219375, -122.0846875),
        ("87G70000+", 40.5, -74.5),
        ("8645WJQ5+PR", 32.9393125, -96.3904375),
        ("8657R2R2+R2R", 33.8421125, -94.999984375),
        ("849VCWC8+Q48F", 37.4219125, -122.08467578125),
        ("CFX30000+", 89.5, 1.5),
        ("62G20000+", 0.5, -179.5),
        ("8FVCCJ8F+6X", 47.4155625, 8.6249375),
    ];

    #[test]
    fn decode_matches_reference_vectors_exactly() {
        for &(code, lat, lon) in VECTORS {
            let p = decode_plus_code(code).unwrap();
            assert_eq!(p.lat, lat, "lat of {code}");
            assert_eq!(p.lon, lon, "lon of {code}");
        }
    }

    #[test]
    fn minimal_alphabet_corner_code() {
        // all-'2' digits select the south-west-most cell; the center sits
        // half a cell (0.00125 degrees at 8 digits) inside each edge
        let p = decode_plus_code("22222222+").unwrap();
        assert_eq!(p.lat, -90.0 + 0.00125);
        assert_eq!(p.lon, -180.0 + 0.00125);
    }

    #[test]
    fn decode_is_case_insensitive() {
        let upper = decode_plus_code("8FVC2222+22").unwrap();
        let lower = decode_plus_code("8fvc2222+22").unwrap();
        assert_eq!(upper, lower);
    }

    #[test]
    fn decode_reports_distinct_errors() {
        assert_eq!(decode_plus_code("8FVC22222222"), Err(OlcError::MissingSeparator));
        assert_eq!(
            decode_plus_code("8FVC1222+22"),
            Err(OlcError::InvalidCharacter { ch: '1', position: 4 })
        );
        assert_eq!(
            decode_plus_code("2222+22"),
            Err(OlcError::ShortCodeWithoutReference { digits: 4 })
        );
        assert_eq!(decode_plus_code("8FVC22222+2"), Err(OlcError::MisplacedSeparator(9)));
        assert_eq!(decode_plus_code("8FVC2222+2"), Err(OlcError::InvalidLength(10)));
        // padding may not be followed by digits or appear after the separator
        assert_eq!(decode_plus_code("86570JC7+V8"), Err(OlcError::InvalidPadding(5)));
        assert_eq!(decode_plus_code("8FVC2222+00"), Err(OlcError::InvalidPadding(9)));
        assert_eq!(decode_plus_code("8F0C2222+"), Err(OlcError::InvalidPadding(3)));
    }

    #[test]
    fn decode_area_brackets_center() {
        for &(code, lat, lon) in VECTORS {
            let area = decode(code).unwrap();
            assert!(area.south < lat && lat < area.north, "{code}");
            assert!(area.west < lon && lon < area.east, "{code}");
            let c = area.center();
            assert!((c.lat - lat).abs() < 1e-12 && (c.lon - lon).abs() < 1e-12);
        }
    }

    #[test]
    fn encode_decode_round_trips_on_unpadded_vectors() {
        for &(code, _, _) in VECTORS {
            if code.contains(PADDING) {
                continue;
            }
            let area = decode(code).unwrap();
            let c = area.center();
            let back = encode(c.lat, c.lon, area.code_length).unwrap();
            assert_eq!(back, code.to_string(), "round trip of {code}");
        }
    }

    #[test]
    fn encode_decode_round_trips_on_random_codes() {
        // acceptance-scale sweep: 1000 random codes across all lengths
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let lengths = [2usize, 4, 6, 8, 10, 11, 12, 13, 14, 15];
        for i in 0..1000 {
            let len = lengths[i % lengths.len()];
            let mut digits: Vec<u8> = Vec::new();
            digits.push(ALPHABET[rng.random_range(0..9)]); // lat pair digit < 180/20
            digits.push(ALPHABET[rng.random_range(0..18)]); // lon pair digit < 360/20
            for _ in 2..len {
                digits.push(ALPHABET[rng.random_range(0..20)]);
            }
            let mut code = String::new();
            for (k, &d) in digits.iter().enumerate() {
                if k == 8 {
                    code.push(SEPARATOR);
                }
                code.push(d as char);
            }
            if digits.len() <= 8 {
                for _ in digits.len()..8 {
                    code.push(PADDING);
                }
                code.push(SEPARATOR);
            }

            let area = decode(&code).unwrap();
            assert_eq!(area.code_length, len);
            let center = area.center();
            let back = encode(center.lat, center.lon, len).unwrap();
            assert_eq!(back, code, "iteration {i}");

            // the decoded center sits strictly inside the decoded cell
            assert!(center.lat > area.south && center.lat < area.north);
            assert!(center.lon > area.west && center.lon < area.east);
        }
    }

    #[test]
    fn encode_rejects_bad_lengths() {
        for len in [0usize, 1, 3, 5, 7, 9, 16] {
            assert_eq!(encode(0.0, 0.0, len), Err(OlcError::InvalidLength(len)), "{len}");
        }
    }

    #[test]
    fn encode_clips_poles_and_normalizes_longitude() {
        let north_pole = encode(90.0, 0.0, 10).unwrap();
        let area = decode(&north_pole).unwrap();
        assert!(area.north >= 90.0 - 1e-9);
        let wrapped = encode(10.0, 190.0, 10).unwrap();
        let direct = encode(10.0, -170.0, 10).unwrap();
        assert_eq!(wrapped, direct);
    }
}
