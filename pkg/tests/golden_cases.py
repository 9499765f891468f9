"""The frozen CLI golden suite shared by test_cli and the acceptance run.

Each case is (name, argv); expected stdout lives in tests/golden/<name>.txt.
Cases span all four coalgebras, all five forms, and all three output
formats, and every invocation must exit 0 and print byte-identical output
across runs.
"""

from pathlib import Path

GOLDEN_DIR = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    ("01_list_text", ["list"]),
    ("02_comul_divpow_x2_text", ["comul", "--coalgebra", "divpow", "--element", "x_2"]),
    ("03_comul_divpow_x2_json",
     ["comul", "--coalgebra", "divpow", "--element", "x_2", "--format", "json"]),
    ("04_comul_divpow_x2_csv",
     ["comul", "--coalgebra", "divpow", "--element", "x_2", "--format", "csv"]),
    ("05_comul_manin_a1c1_text",
     ["comul", "--coalgebra", "manin?q=2/3", "--element", "a^1 c^1"]),
    ("06_comul_manin_complex_json",
     ["comul", "--coalgebra", "manin?q=2/3",
      "--element", "(1/2+3i)*a^1 c^0 - i*a^0 c^1", "--format", "json"]),
    ("07_comul_negdeg_x1_text",
     ["comul", "--coalgebra", "negdeg?M=1", "--element", "x_1"]),
    ("08_comul_matrix_E12_text",
     ["comul", "--coalgebra", "matrix?n=2", "--element", "E_1_2"]),
    ("09_apply_divpow_factorial_text",
     ["apply", "--coalgebra", "divpow", "--form", "diag?w=factorial",
      "--symbol", "x_2", "--element", "x_5"]),
    ("10_apply_divpow_vanishes_text",
     ["apply", "--coalgebra", "divpow", "--form", "diag?w=factorial",
      "--symbol", "x_4", "--element", "x_1"]),
    ("11_apply_matrix_orth_text",
     ["apply", "--coalgebra", "matrix?n=3", "--form", "matrix-orth",
      "--symbol", "E_1_2", "--element", "E_3_2"]),
    ("12_apply_manin_orth_zero_text",
     ["apply", "--coalgebra", "manin?q=2/3", "--form", "manin-orth?w=one",
      "--symbol", "a^1 c^1", "--element", "a^2 c^0"]),
    ("13_apply_manin_skew_text",
     ["apply", "--coalgebra", "manin?q=2/3", "--form", "manin-skew?mu=one",
      "--symbol", "a^2 c^1", "--element", "a^1 c^0"]),
    ("14_apply_negdeg_absfact_text",
     ["apply", "--coalgebra", "negdeg?M=3", "--form", "diag?w=absfactorial",
      "--symbol", "x_-2", "--element", "x_1"]),
    ("15_apply_subset_projection_text",
     ["apply", "--coalgebra", "divpow", "--form", "diag?w=one",
      "--symbol", "x_1", "--element", "x_2", "--subset", "x_0,x_2"]),
    ("16_apply_divpow_geom_json",
     ["apply", "--coalgebra", "divpow", "--form", "diag?w=geom:1/2",
      "--symbol", "x_1", "--element", "x_3", "--format", "json"]),
    ("17_matrix_divpow_text",
     ["matrix", "--coalgebra", "divpow", "--form", "diag?w=one",
      "--symbol", "x_1", "--window", "deg<=3"]),
    ("18_matrix_divpow_json",
     ["matrix", "--coalgebra", "divpow", "--form", "diag?w=one",
      "--symbol", "x_1", "--window", "deg<=3", "--format", "json"]),
    ("19_matrix_divpow_csv",
     ["matrix", "--coalgebra", "divpow", "--form", "diag?w=one",
      "--symbol", "x_1", "--window", "deg<=3", "--format", "csv"]),
    ("20_matrix_negdeg_full_text",
     ["matrix", "--coalgebra", "negdeg?M=1", "--form", "diag?w=one",
      "--symbol", "x_-1", "--window", "full"]),
    ("21_matrix_weighted_leakage_json",
     ["matrix", "--coalgebra", "matrix?n=2", "--form", "matrix-weighted?w=one",
      "--symbol", "E_2_1", "--window", "deg<=3", "--format", "json"]),
    ("22_classify_negdeg_creation_text",
     ["classify", "--coalgebra", "negdeg?M=5", "--form", "diag?w=one",
      "--symbol", "x_-2", "--window", "full"]),
    ("23_classify_divpow_annihilation_text",
     ["classify", "--coalgebra", "divpow", "--form", "diag?w=factorial",
      "--symbol", "x_3", "--window", "deg<=8"]),
    ("24_classify_matrix_preservation_text",
     ["classify", "--coalgebra", "matrix?n=3", "--form", "matrix-weighted?w=one",
      "--symbol", "E_2_2", "--window", "full"]),
    ("25_classify_manin_zero_text",
     ["classify", "--coalgebra", "manin?q=2/3", "--form", "manin-orth?w=one",
      "--symbol", "a^1 c^1", "--window", "deg<=4"]),
    ("26_classify_inhomogeneous_json",
     ["classify", "--coalgebra", "divpow", "--form", "diag?w=one",
      "--symbol", "x_1 + x_2", "--window", "deg<=6", "--format", "json"]),
    ("27_gram_divpow_factorial_text",
     ["gram", "--coalgebra", "divpow", "--form", "diag?w=factorial",
      "--window", "deg<=2"]),
    ("28_gram_manin_skew_text",
     ["gram", "--coalgebra", "manin?q=2/3", "--form", "manin-skew?mu=one",
      "--window", "deg<=2"]),
    ("29_gram_matrix_orth_csv",
     ["gram", "--coalgebra", "matrix?n=2", "--form", "matrix-orth",
      "--window", "full", "--format", "csv"]),
    ("30_gram_negdeg_geom_json",
     ["gram", "--coalgebra", "negdeg?M=2", "--form", "diag?w=geom:1/3",
      "--window", "full", "--format", "json"]),
    ("31_verify_negdeg_text", ["verify", "--scope", "negdeg"]),
    ("32_classify_matrix_creation_csv",
     ["classify", "--coalgebra", "matrix?n=4", "--form", "matrix-weighted?w=geom:2",
      "--symbol", "E_3_1", "--window", "full", "--format", "csv"]),
    ("33_apply_matrix_weighted_boundary_text",
     ["apply", "--coalgebra", "matrix?n=2", "--form", "matrix-weighted?w=geom:2",
      "--symbol", "E_1_2", "--element", "E_2_1"]),
    ("34_list_json", ["list", "--format", "json"]),
]
