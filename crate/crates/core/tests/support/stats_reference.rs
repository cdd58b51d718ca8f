//! Frozen reference values. Kernel values were computed with 40-digit
//! arithmetic (mpmath: regularized incomplete beta and the Kolmogorov
//! series summed to convergence); the ANOVA F from exact rational sums of
//! squares, its p-value from scipy's F survival function. All were produced
//! independently of this crate.
#![allow(dead_code, clippy::excessive_precision)]

pub const T_CDF_REF: [(f64, f64, f64); 12] = [
    (0.0, 1.0, 0.5),
    (1.0, 1.0, 0.75),
    (-2.5, 3.0, 0.043_853_323_504_032_773_625),
    (0.5, 5.0, 0.680_850_564_179_535_496_65),
    (2.045_229_642_132_703, 29.0, 0.974_999_999_999_999_930_6),
    (8.088_437_909_003_126, 29.0, 0.999_999_996_795_352_228_78),
    (-1.3, 10.0, 0.111_382_908_603_422_284_61),
    (3.0, 2.0, 0.952_267_016_866_645_433_97),
    (1.96, 1000.0, 0.974_863_407_522_125_640_78),
    (-0.7, 7.0, 0.253_258_776_097_799_900_85),
    (4.2, 15.0, 0.999_613_548_325_036_868_69),
    (0.1, 60.0, 0.539_661_143_971_725_495_79),
];

pub const F_SF_REF: [(f64, f64, f64, f64); 12] = [
    (1.407, 5.0, 24.0, 0.257_328_166_733_653_503_34),
    (1.547, 5.0, 24.0, 0.212_983_283_486_638_312_16),
    (0.5, 1.0, 1.0, 0.608_173_447_969_392_729_83),
    (1.0, 2.0, 10.0, 0.401_877_572_016_460_905_35),
    (3.5, 3.0, 20.0, 0.034_493_103_885_124_386_977),
    (2.2, 4.0, 40.0, 0.086_333_604_093_034_719_889),
    (10.0, 1.0, 5.0, 0.025_031_015_818_452_945_537),
    (0.25, 6.0, 12.0, 0.950_001_836_376_805_564_35),
    (5.0, 2.0, 2.0, 0.166_666_666_666_666_666_67),
    (1.8, 10.0, 30.0, 0.103_972_447_242_518_103_09),
    (0.05, 3.0, 8.0, 0.984_149_861_920_483_682_28),
    (7.5, 2.0, 12.0, 0.007_707_346_629_258_939_374_3),
];

pub const KOLMOGOROV_REF: [(f64, f64); 12] = [
    (0.2, 0.999_999_999_999_494_959_27),
    (0.3, 0.999_990_694_198_665_433_38),
    (0.5, 0.963_945_243_664_875_094_39),
    (0.697, 0.716_223_442_546_754_674_18),
    (0.697_455_490_531_768_7, 0.715_466_862_353_644_561_2),
    (0.8, 0.544_142_411_574_198_076_74),
    (1.0, 0.269_999_671_677_354_521_2),
    (1.2, 0.112_249_666_670_724_984_83),
    (1.36, 0.049_485_876_755_377_883_64),
    (1.5, 0.022_217_962_616_525_128_721),
    (2.0, 0.000_670_925_255_779_695_346_54),
    (2.5, 7.453_306_344_157_341_600_1e-6),
];

pub const ANOVA_GROUPS: [(&str, [f64; 5]); 3] = [
    ("g1", [12.5, 14.0, 11.75, 13.25, 15.0]),
    ("g2", [16.5, 18.0, 15.25, 17.75, 16.0]),
    ("g3", [13.0, 12.25, 14.5, 13.75, 12.0]),
];
pub const ANOVA_F: f64 = 15.183_925_811_437_403;
pub const ANOVA_P: f64 = 5.162_604_093_508_254_5e-4;

pub fn anova_groups() -> Vec<(&'static str, Vec<f64>)> {
    ANOVA_GROUPS.iter().map(|(l, v)| (*l, v.to_vec())).collect()
}
