//! Published reference data: per-project counts for 30 projects under both
//! methods (rater means), and the published calibration tables.

use crate::model::ProjectId;
use crate::sensitivity::PublishedRow;

/// One project's rater-mean counts, in hundredths of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergedCount {
    pub project: u32,
    pub fp41_centi: u32,
    pub efp41_centi: u32,
}

impl MergedCount {
    pub fn project_id(&self) -> ProjectId {
        ProjectId::new(self.project.to_string())
    }

    pub fn fp41(&self) -> f64 {
        f64::from(self.fp41_centi) / 100.0
    }

    pub fn efp41(&self) -> f64 {
        f64::from(self.efp41_centi) / 100.0
    }
}

const fn mc(project: u32, fp41_centi: u32, efp41_centi: u32) -> MergedCount {
    MergedCount {
        project,
        fp41_centi,
        efp41_centi,
    }
}

pub const TABLE11: [MergedCount; 30] = [
    mc(1, 29100, 21000),
    mc(2, 27500, 22475),
    mc(3, 17300, 15500),
    mc(4, 21800, 17100),
    mc(5, 13950, 8900),
    mc(6, 22950, 14825),
    mc(7, 25200, 23850),
    mc(8, 37400, 34225),
    mc(9, 22150, 20550),
    mc(10, 27200, 21800),
    mc(11, 18800, 17050),
    mc(12, 43600, 32000),
    mc(13, 27700, 19850),
    mc(14, 45150, 34475),
    mc(15, 54800, 43300),
    mc(16, 25600, 20100),
    mc(17, 35250, 18850),
    mc(18, 44150, 32350),
    mc(19, 34500, 24875),
    mc(20, 26850, 19500),
    mc(21, 11050, 8850),
    mc(22, 13500, 10700),
    mc(23, 25600, 21300),
    mc(24, 18700, 16075),
    mc(25, 26350, 16100),
    mc(26, 40850, 34850),
    mc(27, 66400, 44875),
    mc(28, 25600, 14875),
    mc(29, 11650, 9300),
    mc(30, 24200, 13825),
];

const fn row(ret_ftr: u32, det: u32, inc: (i64, i64), sens: (i64, i64)) -> PublishedRow {
    PublishedRow {
        ret_ftr,
        det,
        increase_fp41: inc.0,
        increase_efp41: inc.1,
        sensitivity_fp41: sens.0,
        sensitivity_efp41: sens.1,
    }
}

/// Calibration with DET increments only (increase and sensitivity, hundredths).
pub const DET_ONLY_CURVE: [PublishedRow; 9] = [
    row(0, 1, (345, 852), (345, 852)),
    row(0, 2, (653, 1661), (327, 830)),
    row(0, 3, (870, 2427), (290, 809)),
    row(0, 4, (1152, 3209), (288, 802)),
    row(0, 5, (1338, 4087), (268, 817)),
    row(0, 6, (1573, 4848), (262, 808)),
    row(0, 7, (1717, 5441), (245, 777)),
    row(0, 8, (2010, 6219), (251, 777)),
    row(0, 9, (2222, 6655), (247, 739)),
];

/// Calibration with one extra RET/FTR plus DET increments.
pub const RET_FTR_CURVE: [PublishedRow; 9] = [
    row(1, 1, (3145, 6228), (286, 566)),
    row(1, 2, (3627, 7349), (302, 612)),
    row(1, 3, (4108, 8174), (316, 629)),
    row(1, 4, (4515, 9019), (323, 644)),
    row(1, 5, (4753, 9752), (317, 650)),
    row(1, 6, (5002, 10308), (313, 644)),
    row(1, 7, (5212, 10794), (307, 635)),
    row(1, 8, (5577, 11558), (310, 642)),
    row(1, 9, (5907, 11966), (311, 630)),
];

/// Names accepted by the `fixture` command.
pub const FIXTURE_NAMES: [&str; 1] = ["table11"];
