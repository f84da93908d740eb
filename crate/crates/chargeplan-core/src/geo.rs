//! Geographic primitives: WGS-84 points, bounding boxes, and great-circle
//! distance.
//!
//! All geographic distances in the planner use the haversine formula on a
//! spherical Earth. Planar Euclidean distance on raw degrees is anisotropic
//! (1 degree of longitude shrinks with latitude), so a single well-defined
//! metric is used everywhere instead.

use serde::{Deserialize, Serialize};

/// Mean Earth radius in kilometres (IUGG mean radius R1).
pub const EARTH_RADIUS_KM: f64 = 6371.0088;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeoError {
    #[error("latitude {0} outside [-90, 90]")]
    LatitudeOutOfRange(f64),
    #[error("longitude {0} outside [-180, 180]")]
    LongitudeOutOfRange(f64),
    #[error("bounding box north {north} must exceed south {south}")]
    EmptyLatSpan { north: f64, south: f64 },
    #[error("bounding box east {east} must exceed west {west}")]
    EmptyLonSpan { east: f64, west: f64 },
    #[error("cell size must be positive, got {0}")]
    NonPositiveCellSize(f64),
}

/// A WGS-84 geographic coordinate in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeoPoint {
    pub lat: f64,
    pub lon: f64,
}

impl GeoPoint {
    /// Builds a point, rejecting coordinates outside the valid ranges.
    pub fn new(lat: f64, lon: f64) -> Result<Self, GeoError> {
        if !(-90.0..=90.0).contains(&lat) || lat.is_nan() {
            return Err(GeoError::LatitudeOutOfRange(lat));
        }
        if !(-180.0..=180.0).contains(&lon) || lon.is_nan() {
            return Err(GeoError::LongitudeOutOfRange(lon));
        }
        Ok(Self { lat, lon })
    }
}

/// A study region bounded by parallels and meridians.
///
/// The region must not cross the antimeridian: `east > west` is required in
/// plain degree order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub north: f64,
    pub south: f64,
    pub east: f64,
    pub west: f64,
}

impl BoundingBox {
    pub fn new(north: f64, south: f64, east: f64, west: f64) -> Result<Self, GeoError> {
        GeoPoint::new(north, west)?;
        GeoPoint::new(south, east)?;
        if north <= south {
            return Err(GeoError::EmptyLatSpan { north, south });
        }
        if east <= west {
            return Err(GeoError::EmptyLonSpan { east, west });
        }
        Ok(Self { north, south, east, west })
    }

    /// North-south extent in km, measured along a meridian.
    pub fn height_km(&self) -> f64 {
        haversine_km(
            GeoPoint { lat: self.south, lon: self.west },
            GeoPoint { lat: self.north, lon: self.west },
        )
    }

    /// East-west extent in km, measured along the mid-latitude parallel.
    pub fn width_km(&self) -> f64 {
        let mid = 0.5 * (self.north + self.south);
        haversine_km(
            GeoPoint { lat: mid, lon: self.west },
            GeoPoint { lat: mid, lon: self.east },
        )
    }

    pub fn contains(&self, p: GeoPoint) -> bool {
        p.lat >= self.south && p.lat <= self.north && p.lon >= self.west && p.lon <= self.east
    }
}

/// Great-circle distance between two points in km.
///
/// Symmetric, nonnegative, and zero iff the points coincide.
pub fn haversine_km(a: GeoPoint, b: GeoPoint) -> f64 {
    let phi1 = a.lat.to_radians();
    let phi2 = b.lat.to_radians();
    let dphi = (b.lat - a.lat).to_radians();
    let dlambda = (b.lon - a.lon).to_radians();

    let s1 = libm::sin(0.5 * dphi);
    let s2 = libm::sin(0.5 * dlambda);
    let h = s1 * s1 + libm::cos(phi1) * libm::cos(phi2) * s2 * s2;
    // h can exceed 1 by rounding for antipodal points
    2.0 * EARTH_RADIUS_KM * libm::asin(libm::sqrt(if h > 1.0 { 1.0 } else { h }))
}
