//! Square-cell binning of the study region and per-cell feature assignment.
//!
//! The bounding box is split into `ceil(height_km / cell_km)` rows by
//! `ceil(width_km / cell_km)` columns of equal-degree cells, indexed
//! row-major from the south-west corner. Each cell carries six binary POI
//! presence flags (raw counts are kept alongside), the total charger port
//! count, and a classification:
//!
//! | class | charger | POI |
//! |-------|---------|-----|
//! | C1    | yes     | yes |
//! | C2    | yes     | no  |
//! | C3    | no      | yes |
//! | C4    | no      | no  |
//!
//! C1 and C4 cells train the demand model, C3 cells are the candidate
//! locations it predicts for, and C2 cells are discarded.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::geo::{haversine_km, BoundingBox, GeoError, GeoPoint};

/// The six POI categories used as demand-prediction features.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoiCategory {
    GasStation,
    GroceryStore,
    CafeRestaurant,
    ShoppingMall,
    Theater,
    School,
}

pub const POI_CATEGORY_COUNT: usize = 6;

impl PoiCategory {
    pub const ALL: [PoiCategory; POI_CATEGORY_COUNT] = [
        PoiCategory::GasStation,
        PoiCategory::GroceryStore,
        PoiCategory::CafeRestaurant,
        PoiCategory::ShoppingMall,
        PoiCategory::Theater,
        PoiCategory::School,
    ];

    pub fn index(self) -> usize {
        match self {
            PoiCategory::GasStation => 0,
            PoiCategory::GroceryStore => 1,
            PoiCategory::CafeRestaurant => 2,
            PoiCategory::ShoppingMall => 3,
            PoiCategory::Theater => 4,
            PoiCategory::School => 5,
        }
    }

    /// Parses a category name; accepts spaces, underscores, hyphens and
    /// any casing (`"Gas Station"`, `"gas_station"`, ...).
    pub fn parse(name: &str) -> Option<Self> {
        let mut key = alloc::string::String::new();
        for ch in name.chars() {
            match ch {
                ' ' | '_' | '-' | '&' => {}
                c => key.push(c.to_ascii_lowercase()),
            }
        }
        match key.as_str() {
            "gasstation" => Some(PoiCategory::GasStation),
            "grocerystore" | "grocery" => Some(PoiCategory::GroceryStore),
            "caferestaurant" | "cafe" | "restaurant" => Some(PoiCategory::CafeRestaurant),
            "shoppingmall" | "mall" => Some(PoiCategory::ShoppingMall),
            "theater" | "theatre" => Some(PoiCategory::Theater),
            "school" => Some(PoiCategory::School),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PoiCategory::GasStation => "gas_station",
            PoiCategory::GroceryStore => "grocery_store",
            PoiCategory::CafeRestaurant => "cafe_restaurant",
            PoiCategory::ShoppingMall => "shopping_mall",
            PoiCategory::Theater => "theater",
            PoiCategory::School => "school",
        }
    }
}

/// Cell category by charger/POI presence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellClass {
    C1,
    C2,
    C3,
    C4,
}

/// Classification is a pure function of charger and POI presence.
pub fn classify(has_charger: bool, has_poi: bool) -> CellClass {
    match (has_charger, has_poi) {
        (true, true) => CellClass::C1,
        (true, false) => CellClass::C2,
        (false, true) => CellClass::C3,
        (false, false) => CellClass::C4,
    }
}

/// One spatial bin with its demand-model features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    pub row: usize,
    pub col: usize,
    pub center: GeoPoint,
    pub poi_flags: [bool; POI_CATEGORY_COUNT],
    pub poi_counts: [u32; POI_CATEGORY_COUNT],
    pub port_count: u32,
    pub classification: CellClass,
}

impl GridCell {
    pub fn has_poi(&self) -> bool {
        self.poi_flags.iter().any(|&f| f)
    }
}

/// Counts of input points dropped because they fell outside the region.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AssignStats {
    pub dropped_pois: usize,
    pub dropped_chargers: usize,
}

/// A complete partition of a bounding box into grid cells.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellGrid {
    pub bbox: BoundingBox,
    pub cell_km: f64,
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<GridCell>,
}

impl CellGrid {
    /// Partitions `bbox` into cells of nominal side `cell_km`.
    ///
    /// Row count is `ceil(height_km / cell_km)` with the height measured
    /// along a meridian; column count uses the width at the mid-latitude.
    /// Cells are equal-sized in degrees, row-major from the south-west.
    pub fn partition(bbox: BoundingBox, cell_km: f64) -> Result<Self, GeoError> {
        if !(cell_km > 0.0) {
            return Err(GeoError::NonPositiveCellSize(cell_km));
        }
        // re-validate in case the box was built by hand
        let bbox = BoundingBox::new(bbox.north, bbox.south, bbox.east, bbox.west)?;

        let rows = libm::ceil(bbox.height_km() / cell_km) as usize;
        let cols = libm::ceil(bbox.width_km() / cell_km) as usize;

        let dlat = (bbox.north - bbox.south) / rows as f64;
        let dlon = (bbox.east - bbox.west) / cols as f64;

        let mut cells = Vec::with_capacity(rows * cols);
        for row in 0..rows {
            for col in 0..cols {
                let center = GeoPoint {
                    lat: bbox.south + (row as f64 + 0.5) * dlat,
                    lon: bbox.west + (col as f64 + 0.5) * dlon,
                };
                cells.push(GridCell {
                    row,
                    col,
                    center,
                    poi_flags: [false; POI_CATEGORY_COUNT],
                    poi_counts: [0; POI_CATEGORY_COUNT],
                    port_count: 0,
                    classification: CellClass::C4,
                });
            }
        }
        Ok(Self { bbox, cell_km, rows, cols, cells })
    }

    /// Row-major index of the cell containing `p`, or `None` if `p` lies
    /// outside the bounding box. Points exactly on an interior boundary
    /// belong to the cell with the lower index.
    pub fn cell_index(&self, p: GeoPoint) -> Option<usize> {
        if !self.bbox.contains(p) {
            return None;
        }
        let dlat = (self.bbox.north - self.bbox.south) / self.rows as f64;
        let dlon = (self.bbox.east - self.bbox.west) / self.cols as f64;
        let row = Self::axis_index((p.lat - self.bbox.south) / dlat, self.rows);
        let col = Self::axis_index((p.lon - self.bbox.west) / dlon, self.cols);
        Some(row * self.cols + col)
    }

    // ceil(t) - 1 puts exact boundaries into the lower cell; clamping keeps
    // the box edges inside
    fn axis_index(t: f64, n: usize) -> usize {
        let i = libm::ceil(t) as i64 - 1;
        i.clamp(0, n as i64 - 1) as usize
    }

    /// Bins POIs and chargers into cells, then classifies every cell.
    /// Points outside the bounding box are dropped and counted.
    pub fn assign_points(
        &mut self,
        pois: &[(GeoPoint, PoiCategory)],
        chargers: &[(GeoPoint, u32)],
    ) -> AssignStats {
        let mut stats = AssignStats::default();
        for &(p, cat) in pois {
            match self.cell_index(p) {
                Some(idx) => {
                    self.cells[idx].poi_counts[cat.index()] += 1;
                    self.cells[idx].poi_flags[cat.index()] = true;
                }
                None => stats.dropped_pois += 1,
            }
        }
        for &(p, ports) in chargers {
            match self.cell_index(p) {
                Some(idx) => self.cells[idx].port_count += ports,
                None => stats.dropped_chargers += 1,
            }
        }
        for cell in &mut self.cells {
            cell.classification = classify(cell.port_count > 0, cell.has_poi());
        }
        stats
    }

    pub fn cells_of_class(&self, class: CellClass) -> impl Iterator<Item = (usize, &GridCell)> {
        self.cells.iter().enumerate().filter(move |(_, c)| c.classification == class)
    }

    /// Degree extents of one cell (all cells are equal in degrees).
    pub fn cell_degrees(&self) -> (f64, f64) {
        (
            (self.bbox.north - self.bbox.south) / self.rows as f64,
            (self.bbox.east - self.bbox.west) / self.cols as f64,
        )
    }
}

/// Nominal spans used by the partition, exposed for reporting.
pub fn span_cells(bbox: &BoundingBox, cell_km: f64) -> (usize, usize) {
    (
        libm::ceil(bbox.height_km() / cell_km) as usize,
        libm::ceil(bbox.width_km() / cell_km) as usize,
    )
}

/// Checks that haversine spans round-trip the partition's cell counts.
pub fn partition_is_exhaustive(grid: &CellGrid, sample: &[GeoPoint]) -> bool {
    sample.iter().all(|&p| match grid.cell_index(p) {
        Some(i) => i < grid.cells.len(),
        None => !grid.bbox.contains(p),
    })
}
