//! High-precision constants stored as literals.

/// Derivative of the Riemann zeta function at -1, equal to 1/12 - log A
/// with A the Glaisher–Kinkelin constant.
pub const ZETA_PRIME_MINUS_ONE: f64 = -0.165_421_143_700_450_929_213_919_660_242_780_642_764;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_431_042;

/// log(2π).
pub const LN_2PI: f64 = 1.837_877_066_409_345_483_560_659_472_811_235_279_722_8;

/// B_{2k} / (2k)! for k = 1..=20 (Bernoulli numbers over factorials).
pub(crate) const BERNOULLI_OVER_FACTORIAL: [f64; 20] = [
    8.333_333_333_333_333_333_333_333_333_333_333e-2,
    -1.388_888_888_888_888_888_888_888_888_888_889e-3,
    3.306_878_306_878_306_878_306_878_306_878_307e-5,
    -8.267_195_767_195_767_195_767_195_767_195_767e-7,
    2.087_675_698_786_809_897_921_009_032_120_143e-8,
    -5.284_190_138_687_493_184_847_682_202_179_557e-10,
    1.338_253_653_068_467_883_282_698_097_512_912e-11,
    -3.389_680_296_322_582_866_830_195_391_249_442e-13,
    8.586_062_056_277_844_564_135_905_450_425_627e-15,
    -2.174_868_698_558_061_873_041_516_423_865_918e-16,
    5.509_002_828_360_229_515_202_652_608_902_255e-18,
    -1.395_446_468_581_252_334_070_768_626_406_355e-19,
    3.534_707_039_629_467_471_693_229_977_803_799e-21,
    -8.953_517_427_037_546_850_402_611_318_112_741e-23,
    2.267_952_452_337_683_060_310_950_738_868_166e-24,
    -5.744_790_668_872_202_445_263_881_987_607_018e-26,
    1.455_172_475_614_864_901_866_264_867_271_329e-27,
    -3.685_994_940_665_310_178_181_782_479_908_660e-29,
    9.336_734_257_095_044_672_032_555_152_785_623e-31,
    -2.365_022_415_700_629_934_559_635_196_369_838e-32,
];

/// Bernoulli numbers B_{2k} for k = 1..=10, used by the Stirling series.
pub(crate) const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];
