//! The published tables cell by cell, transcribed by hand from the
//! typeset source into the plain-text notation the emitters use:
//! `gamma^mu` before its scalar factor, factors joined by `*`, `sqrt(q)`
//! written `q^(1/2)`, `d_t` for the time derivative, unit coefficients
//! dropped. The two field-strength examples that are printed with
//! symbolic `h` products carry the products of the stated `h` values.

fn eq(kinetic: &str) -> String {
    format!("({kinetic} - e*gamma^mu*A_mu - m)psi = 0")
}

fn row(cells: &[&str]) -> Vec<String> {
    cells.iter().map(|s| s.to_string()).collect()
}

fn gauge_row(prefix: &[&str], kinetic: &str) -> Vec<String> {
    let mut r = row(prefix);
    r.push(eq(kinetic));
    r
}

fn matrix_rows(example: &str, m: [[&str; 4]; 4]) -> Vec<Vec<String>> {
    ["t", "x", "y", "z"]
        .iter()
        .zip(m)
        .map(|(name, cells)| {
            let mut r = row(&[example, name]);
            r.extend(cells.iter().map(|c| c.to_string()));
            r
        })
        .collect()
}

pub fn tables() -> Vec<(&'static str, Vec<Vec<String>>)> {
    vec![
        (
            "new1",
            vec![
                gauge_row(
                    &["M1", "1", "1", "(1, -q^(-n), q^(n-1)*Psi, 0)"],
                    "i*gamma^0*d_t - i*gamma^x*q^(-n/2)*d_x - i*gamma^y*q^((n-1)/2)*Psi^(1/2)*d_y",
                ),
                gauge_row(&["M2", "1", "2", "(1, 0, 0, -q^n)"], "i*gamma^0*d_t - i*gamma^z*q^(n/2)*d_z"),
                gauge_row(&["M2", "1", "3", "(1, 0, -q^n, 0)"], "i*gamma^0*d_t - i*gamma^y*q^(n/2)*d_y"),
                gauge_row(&["M2", "2", "1", "(1, 0, 0, q^(-n))"], "i*gamma^0*d_t - i*gamma^z*q^(n/2)*d_z"),
                gauge_row(
                    &["M1", "2", "2", "(1, 0, -q^n, q^(n-1)*Psi)"],
                    "i*gamma^0*d_t - i*gamma^y*q^(n/2)*d_y - i*gamma^z*q^((n-1)/2)*Psi^(1/2)*d_z",
                ),
                gauge_row(&["M2", "2", "3", "(1, -q^n, 0, 0)"], "i*gamma^0*d_t - i*gamma^x*q^(n/2)*d_x"),
            ],
        ),
        (
            "new2.m1",
            vec![
                gauge_row(&["1", "2", "(0, 0, q^m, 1)"], "-i*gamma^y*q^(m/2)*d_y - i*gamma^z*d_z"),
                gauge_row(&["1", "3", "(0, -1, -q^m, 0)"], "-i*gamma^x*d_x - i*gamma^y*q^(m/2)*d_y"),
                gauge_row(&["2", "1", "(0, 0, -1, -q^m)"], "-i*gamma^y*d_y - i*gamma^z*q^(m/2)*d_z"),
                gauge_row(&["2", "3", "(0, 1, 0, q^m)"], "-i*gamma^x*d_x - i*gamma^z*q^(m/2)*d_z"),
                gauge_row(&["3", "1", "(0, q^m, 1, 0)"], "-i*gamma^x*q^(m/2)*d_x - i*gamma^y*d_y"),
                gauge_row(&["3", "2", "(0, -q^m, 0, -1)"], "-i*gamma^x*q^(m/2)*d_x - i*gamma^z*d_z"),
            ],
        ),
        (
            "new2.m2",
            vec![
                gauge_row(&["1", "2", "(q^m, 0, 0, -1)"], "-i*gamma^0*q^(m/2)*d_t - i*gamma^z*d_z"),
                gauge_row(&["1", "3", "(q^m, 0, -1, 0)"], "i*gamma^0*q^(m/2)*d_t - i*gamma^y*d_y"),
                gauge_row(&["2", "1", "(1, 0, 0, q^m)"], "i*gamma^0*d_t - i*gamma^z*q^(m/2)*d_z"),
                gauge_row(&["2", "3", "(q^m, -1, 0, 0)"], "i*gamma^0*q^(m/2)*d_t - i*gamma^x*d_x"),
                gauge_row(&["3", "1", "(-1, 0, q^m, 0)"], "i*gamma^0*d_t - i*gamma^y*q^(m/2)*d_y"),
                gauge_row(&["3", "2", "(-1, q^m, 0, 0)"], "i*gamma^0*d_t - i*gamma^x*q^(m/2)*d_z"),
            ],
        ),
        (
            "qgen",
            vec![gauge_row(&["(-1, 1, 0, -q)"], "i*gamma^0*d_t - i*gamma^x*d_x - i*gamma^z*q^(1/2)*d_z")],
        ),
        (
            "qhbar",
            vec![
                gauge_row(
                    &["1", "1", "(-q, 1, q^(1/2), 0)"],
                    "i*gamma^0*q^(1/2)*d_t - i*gamma^x*d_x - i*gamma^y*q^(1/4)*d_y",
                ),
                gauge_row(
                    &["2", "2", "(-q, 1, 0, q^(1/2))"],
                    "i*gamma^0*q^(1/2)*d_t - i*gamma^x*d_x - i*gamma^z*q^(1/4)*d_z",
                ),
                gauge_row(
                    &["3", "3", "(-q, q^(1/2), 0, 1)"],
                    "i*gamma^0*q^(1/2)*d_t - i*gamma^x*q^(1/4)*d_x - i*gamma^z*d_z",
                ),
            ],
        ),
        ("examples44", examples()),
        (
            "app.qhbar",
            vec![
                row(&["1", "1", "-q", "1", "q^(1/2)", "0", "0", "0", "0"]),
                row(&["2", "2", "-q", "1", "0", "q^(1/2)", "0", "0", "0"]),
                row(&["3", "3", "-q", "q^(1/2)", "0", "1", "0", "0", "0"]),
                row(&["1", "2", "-q", "0", "0", "1", "0", "0", "q^(1/2)"]),
                row(&["1", "3", "-q", "0", "1", "0", "0", "q^(1/2)", "0"]),
                row(&["2", "3", "-q", "1", "0", "0", "q^(1/2)", "0", "0"]),
            ],
        ),
        (
            "app.new1",
            vec![
                row(&["M1", "1", "1", "1", "-q^(-n)", "q^(n-1)*Psi", "0", "0", "0", "0"]),
                row(&["M2", "1", "2", "1", "0", "0", "-q^n", "0", "0", "q^(n-1)*Psi"]),
                row(&["M2", "1", "3", "1", "0", "-q^n", "0", "q^(n-1)*Psi", "0", "0"]),
                row(&["M2", "2", "1", "1", "0", "0", "q^(-n)", "0", "0", "q^(n-1)*Psi"]),
                row(&["M1", "2", "2", "1", "0", "-q^n", "q^(n-1)*Psi", "0", "0", "0"]),
                row(&["M2", "2", "3", "1", "-q^n", "0", "0", "q^(n-1)*Psi", "0", "0"]),
                row(&["M2", "3", "1", "1", "0", "0", "-q^n", "0", "q^(n-1)*Psi", "0"]),
                row(&["M2", "3", "2", "1", "-q^n", "0", "0", "q^(n-1)*Psi", "0", "0"]),
                row(&["M1", "3", "3", "1", "q^(n-1)*Psi", "0", "-q^n", "0", "0", "0"]),
            ],
        ),
        (
            "app.new2.m1",
            vec![
                row(&["1", "2", "0", "0", "q^m", "1"]),
                row(&["1", "3", "0", "-1", "-q^m", "0"]),
                row(&["2", "1", "0", "0", "-1", "-q^m"]),
                row(&["2", "3", "0", "1", "0", "q^m"]),
                row(&["3", "1", "0", "q^m", "1", "0"]),
                row(&["3", "2", "0", "-q^m", "0", "-1"]),
            ],
        ),
        (
            "app.new2.m2",
            vec![
                row(&["1", "2", "q^m", "0", "0", "-1"]),
                row(&["1", "3", "q^m", "0", "-1", "0"]),
                row(&["2", "1", "1", "0", "0", "q^m"]),
                row(&["2", "3", "q^m", "-1", "0", "0"]),
                row(&["3", "1", "-1", "0", "q^m", "0"]),
                row(&["3", "2", "-1", "q^m", "0", "0"]),
            ],
        ),
        (
            "app.new3",
            vec![
                row(&["1", "1", "q^l", "-q^(l+1)", "-hbar^l*Phi", "0"]),
                row(&["1", "2", "q^l", "0", "0", "-q^(l+1)"]),
                row(&["1", "3", "q^l", "0", "-q^(l+1)", "0"]),
                row(&["2", "2", "q^l", "0", "-q^(l+1)", "-hbar^l*Phi"]),
                row(&["2", "3", "q^l", "-q^(l+1)", "0", "0"]),
                row(&["3", "3", "q^l", "-hbar^l*Phi", "0", "-q^(l+1)"]),
            ],
        ),
        (
            "app.dirac.new1",
            vec![
                row(&[
                    "1",
                    "1",
                    "1",
                    "-q^(-n)",
                    "q^(n-1)*Psi",
                    "0",
                    "gamma^0*d_t - gamma^x*q^(-n/2)*d_x - gamma^y*q^((n-1)/2)*Psi^(1/2)*d_y",
                ]),
                row(&["1", "2", "1", "0", "0", "-q^n", "gamma^0*d_t - gamma^z*q^(n/2)*d_z"]),
                row(&["1", "3", "1", "0", "-q^n", "0", "gamma^0*d_t - gamma^y*q^(n/2)*d_y"]),
                row(&["2", "1", "1", "0", "0", "-q^n", "gamma^0*d_t - gamma^z*q^(n/2)*d_z"]),
                row(&[
                    "2",
                    "2",
                    "1",
                    "0",
                    "-q^n",
                    "q^(n-1)*Psi",
                    "gamma^0*d_t - gamma^y*q^(n/2)*d_y - gamma^z*q^((n-1)/2)*d_z",
                ]),
                row(&["2", "3", "1", "-q^n", "0", "0", "gamma^0*d_t - gamma^x*q^(n/2)*d_x"]),
                row(&["3", "1", "1", "0", "0", "-q^n", "gamma^0*d_t - gamma^z*q^(n/2)*d_z"]),
                row(&["3", "2", "1", "-q^n", "0", "0", "gamma^0*d_t - gamma^x*q^(n/2)*d_x"]),
                row(&[
                    "3",
                    "3",
                    "1",
                    "q^(n-1)*Psi",
                    "0",
                    "-q^n",
                    "gamma^0*d_t - gamma^x*q^((n-1)/2)*Psi^(1/2)*d_x - gamma^z*q^(n/2)*d_z",
                ]),
            ],
        ),
        (
            "app.dirac.new2.m1",
            vec![
                row(&["1", "2", "0", "0", "q^m", "1", "-gamma^y*q^(m/2)*d_y - gamma^z*d_z"]),
                row(&["1", "3", "0", "-1", "-q^m", "0", "-gamma^x*d_x - gamma^y*q^(m/2)*d_y"]),
                row(&["2", "1", "0", "0", "-1", "-q^m", "-gamma^y*d_y - gamma^z*q^(m/2)*d_z"]),
                row(&["2", "3", "0", "1", "0", "q^m", "-gamma^x*d_x - gamma^z*q^(m/2)*d_z"]),
                row(&["3", "1", "0", "q^m", "1", "0", "-gamma^x*q^(m/2)*d_x - gamma^y*d_y"]),
                row(&["3", "2", "0", "-q^m", "0", "-1", "-gamma^x*q^(m/2)*d_x - gamma^z*d_z"]),
            ],
        ),
        (
            "app.dirac.new2.m2",
            vec![
                row(&["1", "2", "q^m", "0", "0", "-1", "-gamma^0*q^(m/2)*d_t - gamma^z*d_z"]),
                row(&["1", "3", "q^m", "0", "-1", "0", "gamma^0*q^(m/2)*d_t - gamma^y*d_y"]),
                row(&["2", "1", "1", "0", "0", "q^m", "gamma^0*d_t - gamma^z*q^(m/2)*d_z"]),
                row(&["2", "3", "q^m", "-1", "0", "0", "gamma^0*q^(m/2)*d_t - gamma^x*d_x"]),
                row(&["3", "1", "-1", "0", "q^m", "0", "gamma^0*d_t - gamma^y*q^(m/2)*d_y"]),
                row(&["3", "2", "-1", "q^m", "0", "0", "gamma^0*d_t - gamma^x*q^(m/2)*d_z"]),
            ],
        ),
        (
            "app.dirac.new3",
            vec![
                row(&[
                    "1",
                    "1",
                    "q^l",
                    "-q^(l+1)",
                    "-Phi",
                    "0",
                    "gamma^0*q^(l/2)*d_t - gamma^x*q^((l+1)/2)*d_x - gamma^y*Phi^(1/2)*d_y",
                ]),
                row(&["1", "2", "q^l", "0", "0", "-q^(l+1)", "gamma^0*q^(l/2)*d_t - gamma^z*q^((l+1)/2)*d_z"]),
                row(&["1", "3", "q^l", "0", "-q^(l+1)", "0", "gamma^0*q^(l/2)*d_t - gamma^y*q^((l+1)/2)*d_y"]),
                row(&[
                    "2",
                    "2",
                    "q^l",
                    "0",
                    "-q^(l+1)",
                    "-Phi",
                    "gamma^0*q^(l/2)*d_t - gamma^y*q^((l+1)/2)*d_y - gamma^z*Phi^(1/2)*d_z",
                ]),
                row(&["2", "3", "q^l", "-q^(l+1)", "0", "0", "gamma^0*q^(l/2)*d_t - gamma^x*q^((l+1)/2)*d_x"]),
                row(&[
                    "3",
                    "3",
                    "q^l",
                    "-Phi",
                    "0",
                    "-q^(l+1)",
                    "gamma^0*q^(l/2)*d_t - gamma^x*Phi^(1/2)*d_x - gamma^z*q^((l+1)/2)*d_z",
                ]),
            ],
        ),
        ("app.dirac.qgen", vec![row(&["(-1, 1, 0, -q)", "gamma^0*d_t - gamma^x*d_x - gamma^z*q^(1/2)*d_z"])]),
        (
            "app.dirac.qhbar",
            vec![
                row(&["1", "1", "-q", "1", "q^(1/2)", "0", "gamma^0*q^(1/2)*d_t - gamma^x*d_x - gamma^y*q^(1/4)*d_y"]),
                row(&["2", "2", "-q", "1", "0", "q^(1/2)", "gamma^0*q^(1/2)*d_t - gamma^x*d_x - gamma^z*q^(1/4)*d_z"]),
                row(&["3", "3", "-q", "q^(1/2)", "0", "1", "gamma^0*q^(1/2)*d_t - gamma^x*q^(1/4)*d_x - gamma^z*d_z"]),
            ],
        ),
        (
            "app.simple",
            vec![row(&[
                "(1, -q^n, -q, -1)",
                "gamma^0*d_t - gamma^x*q^(n/2)*d_x - gamma^y*q^(1/2)*d_y - gamma^z*d_z",
                "d_t^2 - q^n*d_x^2 - q*d_y^2 - d_z^2",
            ])],
        ),
    ]
}

fn examples() -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    // h_0 = 1, h_x = q^(n/2), h_y = q^(-(n-1)/2) Psi^(-1/2)
    rows.extend(matrix_rows(
        "1",
        [
            ["0", "ie*q^(n/2)*F_0x", "ie*q^((1-n)/2)*Psi^(-1/2)*F_0y", "0"],
            ["-ie*q^(n/2)*F_0x", "0", "ie*q^(1/2)*Psi^(-1/2)*F_xy", "0"],
            ["-ie*q^((1-n)/2)*Psi^(-1/2)*F_0y", "-ie*q^(1/2)*Psi^(-1/2)*F_xy", "0", "0"],
            ["0", "0", "0", "0"],
        ],
    ));
    // h_0 = 1, h_z = q^(-n/2)
    rows.extend(matrix_rows(
        "2",
        [
            ["0", "0", "0", "ie*q^(-n/2)*F_0z"],
            ["0", "0", "0", "0"],
            ["0", "0", "0", "0"],
            ["-ie*q^(-n/2)*F_0z", "0", "0", "0"],
        ],
    ));
    rows.extend(matrix_rows(
        "3",
        [
            ["0", "ie*F_0x", "0", "ie*q^(-1/2)*F_0z"],
            ["-ie*F_0x", "0", "0", "ie*q^(-1/2)*F_xz"],
            ["0", "0", "0", "0"],
            ["-ie*q^(-1/2)*F_0z", "-ie*q^(-1/2)*F_xz", "0", "0"],
        ],
    ));
    rows.extend(matrix_rows(
        "4",
        [
            ["0", "ie*q^(-1/2)*F_0x", "ie*q^(-3/4)*F_0y", "0"],
            ["-ie*q^(-1/2)*F_0x", "0", "ie*q^(-1/4)*F_xy", "0"],
            ["-ie*q^(-3/4)*F_0y", "-ie*q^(-1/4)*F_xy", "0", "0"],
            ["0", "0", "0", "0"],
        ],
    ));
    rows
}
