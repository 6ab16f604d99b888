#![allow(clippy::excessive_precision)] // oracle values kept at full printed precision
//! Reference values for the accuracy tables.
//!
//! `PUB_*` constants are published reference tables, printed to four
//! decimals (front coefficients) and four decimals of a percent
//! (relative errors). `ORACLE_*` constants were computed from the
//! defining equations of each method with an independent 50-digit
//! arbitrary-precision solver and are stored to 17 significant digits.
//!
//! Two caveats about the published convective tables, established by
//! checking every cell against the defining equations:
//!
//! * the alpha = 0.5 and alpha = 5 data sets appear under each other's
//!   captions; the constants below are keyed by the alpha that actually
//!   generated them;
//! * the classical-HBIM and RIM columns (`nu1h`, `nu3h`) do not satisfy
//!   those methods' front equations for any alpha (checked over the full
//!   Bi grid; only the Bi = 1 `nu1h` cells do). The exact and
//!   modified-HBIM columns agree with their equations everywhere.

pub const STE_GRID: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
pub const BI_GRID: [f64; 11] = [
    1.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0, 100.0,
];

/// One published Dirichlet accuracy table: rows follow [`STE_GRID`].
pub struct DirichletTable {
    pub alpha: f64,
    pub nu: [f64; 10],
    pub nu1: [f64; 10],
    pub pct1: [f64; 10],
    pub nu2: [f64; 10],
    pub pct2: [f64; 10],
    pub nu3: [f64; 10],
    pub pct3: [f64; 10],
}

pub const PUB_DIRICHLET_A0: DirichletTable = DirichletTable {
    alpha: 0.0,
    nu: [
        0.2200, 0.3064, 0.3699, 0.4212, 0.4648, 0.5028, 0.5365, 0.5669, 0.5946, 0.6201,
    ],
    nu1: [
        0.2232, 0.3143, 0.3827, 0.4388, 0.4869, 0.5290, 0.5666, 0.6006, 0.6316, 0.6600,
    ],
    pct1: [
        1.4530, 2.5729, 3.4575, 4.1687, 4.7478, 5.2236, 5.6173, 5.9443, 6.2165, 6.4432,
    ],
    nu2: [
        0.2209, 0.3087, 0.3738, 0.4270, 0.4723, 0.5122, 0.5477, 0.5799, 0.6094, 0.6365,
    ],
    pct2: [
        0.3947, 0.7499, 1.0707, 1.3618, 1.6266, 1.8683, 2.0895, 2.2923, 2.4786, 2.6500,
    ],
    nu3: [
        0.2218, 0.3111, 0.3780, 0.4330, 0.4804, 0.5222, 0.5599, 0.5941, 0.6255, 0.6547,
    ],
    pct3: [
        0.7954, 1.5213, 2.1856, 2.7953, 3.3561, 3.8729, 4.3501, 4.7913, 5.1999, 5.5786,
    ],
};

pub const PUB_DIRICHLET_A05: DirichletTable = DirichletTable {
    alpha: 0.5,
    nu: [
        0.2569, 0.3339, 0.3876, 0.4298, 0.4650, 0.4953, 0.5220, 0.5458, 0.5675, 0.5873,
    ],
    nu1: [
        0.2587, 0.3372, 0.3921, 0.4353, 0.4711, 0.5018, 0.5288, 0.5528, 0.5745, 0.5943,
    ],
    pct1: [
        0.6956, 0.9999, 1.1718, 1.2678, 1.3143, 1.3264, 1.3133, 1.2814, 1.2352, 1.1777,
    ],
    nu2: [
        0.2574, 0.3349, 0.3891, 0.4318, 0.4674, 0.4980, 0.5249, 0.5491, 0.5709, 0.5909,
    ],
    pct2: [
        0.2001, 0.3147, 0.3974, 0.4596, 0.5067, 0.5423, 0.5684, 0.5869, 0.5989, 0.6054,
    ],
    nu3: [
        0.2580, 0.3360, 0.3907, 0.4338, 0.4698, 0.5007, 0.5280, 0.5523, 0.5744, 0.5946,
    ],
    pct3: [
        0.4012, 0.6321, 0.7995, 0.9260, 1.0225, 1.0959, 1.1508, 1.1905, 1.2173, 1.2334,
    ],
};

pub const PUB_DIRICHLET_A5: DirichletTable = DirichletTable {
    alpha: 5.0,
    nu: [
        0.3793, 0.4151, 0.4374, 0.4537, 0.4667, 0.4775, 0.4869, 0.4950, 0.5023, 0.5090,
    ],
    nu1: [
        0.3563, 0.3849, 0.4020, 0.4143, 0.4239, 0.4317, 0.4384, 0.4442, 0.4492, 0.4538,
    ],
    pct1: [
        6.0700, 7.2853, 8.0816, 8.6859, 9.1776, 9.5943, 9.9572, 10.2795, 10.5699, 10.8345,
    ],
    nu2: [
        0.3723, 0.4055, 0.4256, 0.4403, 0.4518, 0.4612, 0.4693, 0.4763, 0.4826, 0.4881,
    ],
    pct2: [
        1.8469, 2.3333, 2.6810, 2.9615, 3.2010, 3.4122, 3.6025, 3.7766, 3.9376, 4.0880,
    ],
    nu3: [
        0.3656, 0.3963, 0.4145, 0.4276, 0.4377, 0.4460, 0.4529, 0.4589, 0.4642, 0.4689,
    ],
    pct3: [
        3.6135, 4.5496, 5.2154, 5.7505, 6.2058, 6.6060, 6.9656, 7.2936, 7.5962, 7.8780,
    ],
};

/// One published convective accuracy table at Ste = 0.5: rows follow
/// [`BI_GRID`]. `alpha` is the value that generated the data (see the
/// module docs about the swapped captions).
pub struct ConvectiveTable {
    pub alpha: f64,
    pub nu_h: [f64; 11],
    pub nu1h: [f64; 11],
    pub nu2h: [f64; 11],
    pub nu3h: [f64; 11],
}

pub const PUB_CONVECTIVE_A0: ConvectiveTable = ConvectiveTable {
    alpha: 0.0,
    nu_h: [
        0.2926, 0.4422, 0.4533, 0.4571, 0.4590, 0.4601, 0.4609, 0.4615, 0.4619, 0.4622, 0.4625,
    ],
    nu1h: [
        0.2966, 0.4681, 0.4776, 0.4807, 0.4822, 0.4832, 0.4838, 0.4842, 0.4845, 0.4848, 0.4850,
    ],
    nu2h: [
        0.2937, 0.4484, 0.4602, 0.4642, 0.4662, 0.4674, 0.4682, 0.4688, 0.4693, 0.4696, 0.4699,
    ],
    nu3h: [
        0.2899, 0.4545, 0.4672, 0.4716, 0.4738, 0.4751, 0.4759, 0.4766, 0.4771, 0.4774, 0.4777,
    ],
};

pub const PUB_CONVECTIVE_A05: ConvectiveTable = ConvectiveTable {
    alpha: 0.5,
    nu_h: [
        0.3274, 0.4459, 0.4553, 0.4585, 0.4601, 0.4610, 0.4617, 0.4622, 0.4625, 0.4628, 0.4630,
    ],
    nu1h: [
        0.3293, 0.4551, 0.4631, 0.4657, 0.4671, 0.4679, 0.4684, 0.4688, 0.4691, 0.4693, 0.4695,
    ],
    nu2h: [
        0.3280, 0.4480, 0.4574, 0.4607, 0.4623, 0.4633, 0.4640, 0.4645, 0.4648, 0.4651, 0.4653,
    ],
    nu3h: [
        0.3160, 0.4474, 0.4583, 0.4621, 0.4640, 0.4651, 0.4659, 0.4664, 0.4668, 0.4672, 0.4674,
    ],
};

pub const PUB_CONVECTIVE_A5: ConvectiveTable = ConvectiveTable {
    alpha: 5.0,
    nu_h: [
        0.4073, 0.4569, 0.4616, 0.4632, 0.4641, 0.4646, 0.4649, 0.4652, 0.4654, 0.4655, 0.4656,
    ],
    nu1h: [
        0.3834, 0.4170, 0.4203, 0.4214, 0.4220, 0.4224, 0.4226, 0.4228, 0.4229, 0.4230, 0.4231,
    ],
    nu2h: [
        0.4005, 0.4437, 0.4476, 0.4489, 0.4496, 0.4501, 0.4503, 0.4505, 0.4507, 0.4508, 0.4509,
    ],
    nu3h: [
        0.3730, 0.4259, 0.4315, 0.4335, 0.4345, 0.4351, 0.4356, 0.4359, 0.4361, 0.4363, 0.4364,
    ],
};

/// Independently computed front coefficients for the convective
/// problems at Ste = 0.5 over [`BI_GRID`] (17 digits, 50-digit solver).
pub struct ConvectiveOracle {
    pub alpha: f64,
    pub nu_h: [f64; 11],
    pub nu1h: [f64; 11],
    pub nu2h: [f64; 11],
    pub nu3h: [f64; 11],
}

pub const ORACLE_CONVECTIVE_A0: ConvectiveOracle = ConvectiveOracle {
    alpha: 0.0,
    nu_h: [
        0.29256124643162946,
        0.44217808830107265,
        0.45329787746717656,
        0.45708563093389269,
        0.45899500801955841,
        0.46014563157948616,
        0.46091480486746404,
        0.46146524123758667,
        0.46187863114928807,
        0.46220049051554254,
        0.46245818857980275,
    ],
    nu1h: [
        0.29660691271673479,
        0.46088304797735827,
        0.47362017358695358,
        0.47797496300502493,
        0.48017324948640257,
        0.48149896397177199,
        0.48238559639201026,
        0.48302029206270072,
        0.48349707384197841,
        0.4838683552134564,
        0.48416566484975888,
    ],
    nu2h: [
        0.2937137605711085,
        0.44841753494833481,
        0.46016582891146082,
        0.46417697713793878,
        0.46620078367572791,
        0.46742095607172854,
        0.46823687054460008,
        0.46882087855620099,
        0.46925954890161465,
        0.46960113131011013,
        0.46987464601682742,
    ],
    nu3h: [
        0.29832345953720595,
        0.45633914560992195,
        0.46816254804529573,
        0.47219152629897801,
        0.4742227851424938,
        0.47544694592306722,
        0.47626531454774315,
        0.47685097410802198,
        0.47729082722051622,
        0.47763329624573571,
        0.47790749916551899,
    ],
};

pub const ORACLE_CONVECTIVE_A05: ConvectiveOracle = ConvectiveOracle {
    alpha: 0.5,
    nu_h: [
        0.32738610729329403,
        0.44593009299238175,
        0.45525433376620609,
        0.45845379007530227,
        0.46007123355358916,
        0.46104744604564441,
        0.46170066694855462,
        0.46216844077504704,
        0.46251992277456414,
        0.46279368479877533,
        0.46301293879385408,
    ],
    nu1h: [
        0.32932024248392132,
        0.45139824281174234,
        0.4610380903790295,
        0.46434550130402289,
        0.46601741134706531,
        0.46702645628793445,
        0.46770162803270998,
        0.46818511133707901,
        0.46854839188942255,
        0.4688313402531951,
        0.46905794939466359,
    ],
    nu2h: [
        0.32796862157458673,
        0.44795610427384039,
        0.45743880150449122,
        0.46069400301323667,
        0.46233988862004767,
        0.46333335133301218,
        0.46399815006891137,
        0.46447423202361347,
        0.46483196611151102,
        0.4651106033441788,
        0.46533376538019254,
    ],
    nu3h: [
        0.32990031012881739,
        0.45040006307946795,
        0.4598654905755431,
        0.46311252333782458,
        0.46475384033942696,
        0.46574440266585374,
        0.46640720046169347,
        0.46688181986625743,
        0.46723843870336004,
        0.46751619759729085,
        0.46773865005528074,
    ],
};

pub const ORACLE_CONVECTIVE_A5: ConvectiveOracle = ConvectiveOracle {
    alpha: 5.0,
    nu_h: [
        0.4072901244895686,
        0.45688759815745573,
        0.46157988507152734,
        0.46323456981201642,
        0.46408032261711737,
        0.46459386625784252,
        0.46493881539219996,
        0.46518649019464158,
        0.4653729537672702,
        0.46551840292655502,
        0.46563502939427778,
    ],
    nu1h: [
        0.38338119237625288,
        0.41774975355426528,
        0.4207050427559112,
        0.42173411193463067,
        0.42225744189589848,
        0.4225743305383354,
        0.42278681230173808,
        0.42293918969795333,
        0.42305380571303111,
        0.42314314982159586,
        0.42321475054111187,
    ],
    nu2h: [
        0.40051007919546286,
        0.44372666683460235,
        0.44759358364696211,
        0.44894628270250527,
        0.44963543364513226,
        0.4500531390329553,
        0.45033339384123596,
        0.45053445902854145,
        0.45068574444549311,
        0.45080370076017596,
        0.45089824920304572,
    ],
    nu3h: [
        0.38934068086984741,
        0.4300441837968589,
        0.43373912994586692,
        0.43503503855675751,
        0.43569596920321697,
        0.43609680973279956,
        0.43636585217221075,
        0.43655892456985925,
        0.43670422453324309,
        0.43681753107352387,
        0.43690836329155303,
    ],
};

/// Published least-squares Dirichlet table (alpha = 0): nu4 and its
/// percentage error; the nu and nu2 columns repeat the alpha = 0 table.
pub const PUB_LSQ_NU4: [f64; 10] = [
    0.2209, 0.3086, 0.3736, 0.4265, 0.4716, 0.5112, 0.5464, 0.5783, 0.6074, 0.6342,
];
pub const PUB_LSQ_PCT4: [f64; 10] = [
    0.3855, 0.7168, 1.0040, 1.2551, 1.4762, 1.6722, 1.8470, 2.0037, 2.1449, 2.2727,
];

/// Published convective least-squares table at alpha = 0, Ste = 0.02,
/// Bi = 1..5 (all three reported coefficients agree to 4 decimals).
pub const PUB_LSQ_SMALL_STE_BI: [f64; 5] = [1.0, 2.0, 3.0, 4.0, 5.0];
pub const PUB_LSQ_SMALL_STE_NUH: [f64; 5] = [0.0193, 0.0350, 0.0468, 0.0553, 0.0617];
pub const PUB_LSQ_SMALL_STE_NU4H: [f64; 5] = [0.0193, 0.0350, 0.0468, 0.0553, 0.0617];

/// Published convective least-squares table at alpha = 0, Ste = 0.5
/// over [`BI_GRID`] (outside the closed-root hypotheses).
pub const PUB_LSQ_NU4H: [f64; 11] = [
    0.2933, 0.4477, 0.4595, 0.4635, 0.4655, 0.4667, 0.4675, 0.4681, 0.4686, 0.4689, 0.4692,
];
