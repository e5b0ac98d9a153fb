//! Serialization helpers shared by the JSON and CSV outputs.

/// Serde adapter writing a complex number as a two-element `[re, im]` array.
pub mod complex {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Fixed float formatting used in every CSV cell: 12 significant digits.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        // Normalizes −0.0 so identical runs stay byte-identical.
        return format!("{:.11e}", 0.0);
    }
    format!("{x:.11e}")
}

/// Joins values into one comma-separated CSV row.
pub fn csv_row(values: &[f64]) -> String {
    values.iter().map(|v| fmt_float(*v)).collect::<Vec<_>>().join(",")
}
