//! Frozen two-sample test fixtures: (sample1, sample2, t, df, p) computed
//! independently with Welch's statistic and the Welch-Satterthwaite degrees
//! of freedom, p two-sided from the t distribution. The statistics are
//! computed from the sample values exactly as stored here.

pub const WELCH_CASES: &[(&[f64], &[f64], f64, f64, f64)] = &[
    (
        &[
            -2.10807, 1.41014, -0.35727, -2.28987, -1.75438, 0.0358468, 0.602061, -0.559128,
            2.29225, -0.308537, -1.78727, 0.14485, -1.64581, 0.147667, 1.5722, 0.00561999, 1.40741,
            -0.65559, 1.03767, -0.694481, 1.98253, 0.935095,
        ],
        &[
            0.577205, 0.119987, 2.85915, 4.31728, -2.4441, 1.06499, -2.61887, -0.173515, 5.66923,
            2.51945, 4.31044, -0.694251, -0.323984, 6.03854, -0.531328, 3.30207, 5.36101, -1.53086,
        ],
        -2.176082863166119e+00,
        2.330878057656557e+01,
        3.992919181435204e-02,
    ),
    (
        &[
            6.38858, 6.93777, 6.09005, 5.70137, 6.04359, 6.01543, 5.82596, 6.61074,
        ],
        &[
            3.80743, -0.172439, 4.74371, -0.328558, 1.39734, 3.19479, 2.67966, 4.10826, 4.53305,
            3.15879, 1.22078, 7.25059, 1.81061, 4.29088, 2.50819, 3.35836, -0.458152, 1.40254,
            4.92749, 0.530449, 1.10098, 4.20304, 1.74869, 1.98234, 1.64823, 3.53097, 3.40671,
            3.89256, 2.90315, 2.1339,
        ],
        1.001206148641841e+01,
        3.591050552212233e+01,
        6.183575796378053e-12,
    ),
    (
        &[
            -2.47548, -3.019, -1.58734, -3.38481, 3.46687, -2.22862, 3.33206, -0.684421, 1.93648,
            0.577729, -4.01843, 0.473661, -8.57335, -3.83175, -2.36812, 0.941754, -1.40366,
            4.51443, 1.51884, 5.60622, 1.90624, -1.90339,
        ],
        &[
            7.06245, -0.362223, 1.65471, 1.54467, 6.80153, 7.74961, 5.37953, 10.049, 2.32658,
            -0.738915, 3.15391, 8.08133, 12.6114, 3.16535, 4.25723, 5.0136, 6.74593,
        ],
        -4.857143563346781e+00,
        3.287534124954504e+01,
        2.832197393756331e-05,
    ),
    (
        &[
            4.1844, 2.15386, 6.08641, 0.596046, 5.65277, 5.62647, 6.32975, 9.55137, 7.30412,
            0.980483, 1.76391, 1.95391, 4.80175, 2.55194, 4.55109, 7.19386, 3.91944,
        ],
        &[
            -2.71238, 0.811683, 6.39829, 3.9377, -6.89168, -6.7541, -5.64666, -5.93652, -3.24308,
            -2.66865, 1.48941, -1.36484, 6.22504, -2.66054, 0.0303295, -9.67099, -5.38263, 7.31493,
            2.70346, -2.74304, 0.0555972, -4.49603, -5.2795, -4.46687,
        ],
        5.502470106850065e+00,
        3.705281906208186e+01,
        2.950578366916633e-06,
    ),
    (
        &[3.27527, 3.60169, 2.43498, 3.32377, 2.99309],
        &[
            -9.90958, -9.32748, -0.668829, 4.52505, -8.91713, -10.1439, -4.5127, -2.64056,
            -8.09508, -1.34216, -8.53744, -3.48423, -3.50055, -9.30106,
        ],
        7.105968944168897e+00,
        1.369913077057687e+01,
        5.968455694971669e-06,
    ),
    (
        &[
            -4.94002, 1.19087, -1.79594, -1.3994, -1.58475, 3.91908, 6.35933, 3.65448, 0.47066,
            0.471264, 3.92534, -6.05691, -8.55295, -0.126561, -0.658127, -5.47271, 1.05522,
            0.75853, -3.38246, -3.3713, -12.8368,
        ],
        &[
            1.43589, 12.7747, -1.00399, 6.70129, -1.14656, 8.76746, 7.05352, 0.359934, 1.4106,
            4.14089, 0.492966, -0.33634, 3.1991, 8.37219, 4.11118, 5.23286, 3.67337, 3.52947,
            0.942763, 0.732248,
        ],
        -3.774959119005513e+00,
        3.819602692668656e+01,
        5.443949126288242e-04,
    ),
    (
        &[
            -3.56191, -2.28127, -2.55404, -4.29408, -4.57633, -4.47652, -4.38751, -4.93006,
            -5.33783, -3.76161, -3.83953, -3.08706, -4.80298, -5.1089, -5.07731, -3.53004,
            -3.66412, -3.05457,
        ],
        &[
            3.72513, 3.40639, 4.68934, 1.90664, 0.286496, 2.86315, 1.4965, 1.57642, -0.43941,
            5.44743, 5.09761,
        ],
        -1.081905917036980e+01,
        1.267744720146788e+01,
        9.096797587389286e-08,
    ),
    (
        &[
            -0.0874313, -2.09509, 1.14382, 3.86936, -4.37752, 0.697881, 3.82252, -4.52397,
            -2.50568, 2.44275, 1.59825, -3.13772, 1.12976, 2.49852,
        ],
        &[1.95935, 0.232091, 1.06875],
        -1.148905360625263e+00,
        1.219976497476364e+01,
        2.726224451864867e-01,
    ),
    (
        &[
            -2.43662, 0.483493, -4.82441, -2.84595, -3.58482, -0.892092, -1.87081, -3.16041,
            -2.51186, -2.35657, -2.30465, -2.59328, -3.66049, -4.09117, -3.3504, -4.07676,
            -3.41745, -2.9045, -4.15905, -0.436993, -2.42726, -5.23557, -4.79019, -1.59716,
            -0.284346, -2.27348, -2.20758,
        ],
        &[
            -2.35705, -2.5798, -5.36398, -3.66613, -7.93188, -6.91437, -8.88079, -5.02661,
            -4.96185, -2.84104, -4.12738, -5.27574, -0.729045, -4.27895, -11.3526, -6.52465,
            -5.84255, -5.49217,
        ],
        3.810240752225570e+00,
        2.402998232843356e+01,
        8.484909518209432e-04,
    ),
    (
        &[
            6.62197, 5.24784, 2.51905, 1.84576, 4.62224, -0.514837, 3.35204, 4.22515, 4.07144,
            3.2262, -0.46138, 0.498372, 2.66402, 2.17397, 3.45489, 6.17355, 4.80469, 0.669884,
            3.57881, 2.03663, 2.63306, 4.41209, 4.20873,
        ],
        &[
            -3.93083, -1.07323, -4.5474, -3.30365, -2.90359, -1.57321, -4.61622, -6.11826,
            -4.11848, -3.17141, -3.16415, -5.83362, -4.53582, -5.38074, -5.73065, -6.1598,
            -4.63002, -2.57092, -1.83292, -7.10985, -5.12785, -3.26562, -3.32074, 0.0990258,
            -4.27978, -4.06588, -6.00668, -1.90282,
        ],
        1.375193870934592e+01,
        4.494300620848567e+01,
        1.029974909812758e-17,
    ),
    (
        &[
            2.11163, 3.89618, 3.91611, 2.91259, -0.969145, -0.638337, -0.0450229, 0.620971,
            0.813926, -2.23676, 0.649157, 0.780575, -4.46021,
        ],
        &[
            -1.00856, 1.33823, -0.52122, -1.5099, 4.88036, -4.17263, -8.73772, -5.79773, -7.08708,
            -2.96614, -4.3943, -0.680236, 1.86014, -5.22587, -1.69793, -2.50827, -0.20605,
            -1.56695, -7.095, 0.951553, -2.71125, -0.59363,
        ],
        2.930190073442627e+00,
        3.145408677578454e+01,
        6.258778706152081e-03,
    ),
    (
        &[
            4.06503, 1.62978, 1.04924, 4.80054, -0.167221, -1.36971, 0.597318, 4.24149, 1.86256,
            4.45215, 0.366003, 3.5606, -0.402948, 1.17363,
        ],
        &[
            6.1578, 1.70454, 8.52897, 8.05658, 4.3081, 6.03367, 6.30606, 1.71484, -0.343409,
            1.46975,
        ],
        -2.284751894262927e+00,
        1.447526717570507e+01,
        3.788348857677494e-02,
    ),
    (
        &[
            -6.44847, -3.9208, -6.3127, -2.67549, -4.83603, 4.59774, 2.04819, 3.33253, -0.815686,
            4.08856, -1.74673, -4.97416,
        ],
        &[
            0.52324, -4.10732, -1.49173, -5.0942, -1.95229, 2.28903, -2.4806, 2.59958, -3.57164,
            -1.51727, -4.59157, -3.63948, -3.56502, -2.90912, -0.273243, 1.47063, -4.87631,
            -4.45302, 2.45515, 1.23052, -1.96173, -5.30352, 0.935178, 0.810339, -3.52879,
        ],
        1.927536167831112e-01,
        1.546815739723275e+01,
        8.496599376641208e-01,
    ),
    (
        &[
            -1.34373, -3.72882, -1.60298, -0.411624, -2.09176, -0.726426, -1.02403, -2.36187,
            -3.70742, -0.816732, -3.71012, -2.38496, -1.91454, -2.97273, -0.180721, -2.15882,
            -3.07379, -4.00436, -0.622369, -1.02559, -0.6736, -2.94096, -1.68651, -3.47993,
            -0.520234, -4.32398,
        ],
        &[
            -2.91334, -3.62953, -2.8283, -2.9521, -2.5814, -3.19988, -3.03778, -3.2355, -2.33193,
            -3.3512, -2.52737, -2.80093,
        ],
        3.269047366301830e+00,
        3.246773717972473e+01,
        2.555388756048421e-03,
    ),
    (
        &[
            4.56335, 9.61451, 6.2629, 1.33253, 10.3707, 10.0486, 8.65278, 7.87289, 7.9025, 4.99141,
            12.2941,
        ],
        &[
            -9.3066, 1.94407, 3.69207, 3.21428, 2.36781, -2.76021, -2.30443,
        ],
        4.027919769044490e+00,
        9.446702449112795e+00,
        2.701818527220591e-03,
    ),
    (
        &[
            2.76344, -4.46916, -0.918457, -0.386332, 0.435199, -6.25356, 4.16386, 0.764394,
            -2.88538, -2.68039, -0.927824, 1.98678, -4.75496, -1.13185, -4.21029, -2.63926,
            0.637393, -1.82627, -0.592778, 1.28081, 2.49678, -1.36266, -0.846381, 0.713986,
        ],
        &[
            0.914523, 0.185344, 0.125492, 4.71416, 2.20686, 5.3668, 9.32021, 4.17392, 5.52151,
            1.00428, 6.14379, 2.81763, 1.67458, 1.67798, 1.41685, 0.568117, 6.71283, 7.91352,
            5.07411, -0.431832, -4.51448, -2.00104,
        ],
        -4.068215567653041e+00,
        3.925005489593001e+01,
        2.214566758192105e-04,
    ),
    (
        &[
            -6.92379, -7.20101, -9.51185, -7.10836, -3.09431, -12.42, -11.7785, -5.31552, -3.59278,
            -6.70283, -8.3653, -8.45149, -4.97349, -6.75936, -8.74008,
        ],
        &[
            4.47547, 4.732, 0.893665, 4.36436, 3.5916, 1.91827, 1.14453, 1.86968, 2.02976, 1.15765,
            2.72763, 1.3082, 2.8344, 3.26948, 0.950168, 3.96157, 4.02827, 4.23504, 2.50615,
            4.17623, 4.82012, 3.35357, 1.49193, 2.0, 2.39465, 3.51268,
        ],
        -1.410929969905850e+01,
        1.789722072012758e+01,
        3.885102811225615e-11,
    ),
    (
        &[
            1.40724, 6.80676, 4.16503, 1.95774, 2.69242, 11.0925, 3.43193, 9.25341, -4.6896,
            1.67924, 1.94289, 4.54829, 0.0336612, 6.98232, 6.79607, 6.07356, 7.92258,
        ],
        &[
            -2.74495, -2.34878, -5.05438, -2.90336, -3.69923, -3.76594, -3.62877, -4.44862,
            -1.57264, -0.673034, -1.75962, -2.81823, -6.21583, -1.9748, 3.03164,
        ],
        6.424903466331498e+00,
        2.560055063838492e+01,
        8.927890514886521e-07,
    ),
    (
        &[
            -4.04601, -5.71591, -2.31637, -3.76505, 1.54287, 2.12789, 0.940924, -0.976816,
            -4.66897, 2.03645, -6.99354, -4.00841, 8.12248, -2.69843, -4.30423, 1.67215,
        ],
        &[
            0.807314, -4.0267, -5.51582, -1.09184, -10.4637, -6.71364, -6.68846, -2.03286,
            -5.81816, -6.23815, 0.493469, -2.41774, -1.67042, -5.0702, -6.61747, -2.16798,
            -5.64869, -5.92777, -4.46181, -2.25894, -4.54143, -2.84424, -8.29288, -5.96266,
            -1.21568, -2.54422, -3.05113, -1.55462,
        ],
        2.375614789811884e+00,
        2.312173387595395e+01,
        2.618612737080870e-02,
    ),
    (
        &[
            -1.08489, -2.82081, -0.39256, 0.146492, -4.09477, -4.59203, -6.42897, -3.50962,
            -2.52078, -3.24859, 2.33244, -4.55668, -0.25365, -1.79485, -0.557756, -2.43659,
        ],
        &[
            4.27891, 4.5482, 5.61125, 5.36345, 5.46515, 2.25674, 1.41863, -0.723329, 6.03789,
            3.07763, 10.5222, 5.72746, 9.57094,
        ],
        -7.037499079611987e+00,
        2.136422727562709e+01,
        5.468344709659901e-07,
    ),
    (
        &[
            0.80948, 0.845853, 0.882179, 0.425974, 0.41264, 0.34075, 0.640181, 0.744717, 0.19865,
            0.801317, 0.547373, 0.460548, 0.382953, 0.758597, 0.938692, 0.480849, 0.375592,
            1.14252, 1.61798, 0.0652418, 0.328954, 1.20499, 0.9216, 1.21554, 1.20651, 1.48254,
            0.662647, 0.423954, 0.947902,
        ],
        &[
            1.20715, 0.587269, -0.97302, -1.22389, -1.70626, -0.827312, -1.0481, 0.724143,
            -0.0134246, -0.916217, -0.667297, -3.92087, 1.25978, -3.13095, -3.61602, -2.03662,
            0.617547, -1.72317, -0.973534, -2.03457, 1.27466, -2.29991, -3.01876, -2.5873,
            -1.90809, 1.04195,
        ],
        5.759739349412058e+00,
        2.773249810278234e+01,
        3.623749400463121e-06,
    ),
    (
        &[
            -0.141409, -6.45768, -3.15413, -5.47044, -6.48835, -8.90304, -6.39898, -6.47398,
            -6.97088, -5.39557, -2.70513, -1.2647, -6.15104, -7.1399, -8.18299, -7.60666, -13.1262,
            -2.75941,
        ],
        &[
            -3.37153, -4.24549, -3.44476, -5.6356, -4.52969, -0.40975, -3.02467, -0.726132,
            1.03369, -0.143923, -5.75209, 0.709191, -2.5787, -8.03869,
        ],
        -2.914440109037413e+00,
        2.940650334785206e+01,
        6.748455368214608e-03,
    ),
    (
        &[
            0.132243, 1.57715, 4.92723, 4.45167, 0.296356, -3.40667, -1.68307, 0.673273, 3.11572,
            5.30052, 0.84833, 0.408066, 6.98709, 5.66585, 1.60724, 3.52448, -1.59322, -4.51708,
            5.90293, 3.29288, -3.08979,
        ],
        &[
            3.15958, -2.47138, 2.5838, -3.28003, -1.98813, 2.30255, 3.43997, 1.89503, 5.72781,
            0.730397, -3.10408, -1.21252, -1.99488, 6.13748, -0.604069, -1.46394, -3.70232,
        ],
        1.217121488176666e+00,
        3.499589187695345e+01,
        2.317022701859816e-01,
    ),
    (
        &[2.26462, -0.27807, 3.31093, 1.75096, 2.80875, 2.17412],
        &[
            2.67948, -4.06155, -4.17548, -3.79195, 0.803751, -2.76235, 1.16038, -4.30694, -2.94914,
            -2.37407, -3.07069, -1.55215, 1.82087, -0.0751923, -1.44605, -1.99983, -0.245005,
            0.873055, 0.601267, -2.11498, -2.87291, -1.05212, 2.98839, -2.58758, -3.52256,
            -1.32935, -0.663292, 1.39127, -7.5872,
        ],
        5.116293662035678e+00,
        1.425710435915511e+01,
        1.482347581156630e-04,
    ),
    (
        &[
            3.44329, 1.96809, 5.24066, 1.39513, 2.16225, 2.14592, -0.0207657, -2.2419, 7.7579,
            -1.93985, 1.70197, -1.06386, -0.783522, 5.43177, 2.31602, 6.54856, 1.91924,
        ],
        &[
            3.70156, -0.277863, -3.13114, 1.15349, 2.95783, 5.1569, 5.55988, 3.25901, 6.58432,
            -0.803765, 3.32782, -0.462378, -2.86374, 4.62045, -3.93328,
        ],
        4.102999740822890e-01,
        2.771514241295944e+01,
        6.847405379155413e-01,
    ),
    (
        &[
            0.327783, 1.20346, 0.958655, 0.701984, 1.18457, 0.430137, -1.00253, -0.262565,
            -0.124364, 0.541584, 1.64487, -0.155147, 2.04049, -0.352825, 3.83849, -0.152061,
            -0.76307, 0.118478,
        ],
        &[
            5.05068, 1.95278, 0.382092, 1.64564, 2.0518, 3.77098, 4.10419, -0.853149, 2.44679,
            0.468137, 5.12935, 3.47078, 5.53584, 5.10934,
        ],
        -3.805439365338179e+00,
        1.938300766018450e+01,
        1.160197079916502e-03,
    ),
    (
        &[
            1.74637, 4.56067, 1.48709, 5.70202, 10.0075, 0.251747, 1.73088, 1.95138, 1.90133,
            -0.716761, 0.146256, 1.30445, 4.38059, 3.18206, 3.5991, 0.2967, 6.14029, 3.00559,
        ],
        &[
            -2.44282, -3.08992, -3.93802, -2.60216, -2.68928, -2.53809, -1.53982, -3.20091,
            -3.58893, -3.36648, -0.492198, -2.84455, -3.49342, -3.19075, -3.53893, -3.60636,
            -2.6271, -2.07388, -2.55129, -2.37162, -2.6922, -2.09,
        ],
        8.667546830850092e+00,
        1.944193159482901e+01,
        4.154274429775723e-08,
    ),
    (
        &[
            6.22528, 3.06289, 0.82662, -0.626736, 0.902498, -3.3607, 0.359201, -2.36884, 5.09093,
            4.16251, 7.47609, 1.27952, 2.64342, 0.14016, -2.50278, 3.92312, 3.53326, 0.99922,
            3.36586,
        ],
        &[
            3.49611, 4.17178, 10.1001, 9.75251, 9.32522, 8.75985, 5.7437, 5.304, 8.26632, 16.4061,
            8.04857, 5.43264, 8.8361, 0.316445, 2.53881, 6.72901,
        ],
        -4.515346889552430e+00,
        2.824133518209210e+01,
        1.024688077605176e-04,
    ),
    (
        &[
            4.22572, 4.71845, 5.32685, 9.79297, 8.30037, 2.72442, 6.73867, 5.55602, 9.25893,
            7.26773, 6.13408, 1.99872,
        ],
        &[
            -7.38014, 4.57811, 6.72637, 13.6479, 4.98582, 1.05983, 2.16179, 0.214838, 0.479288,
            2.10446, 1.41328, 7.59875, -4.96319, -5.83993, -2.07935, -1.99679, 5.83465, -3.48049,
            2.14908, -0.905703, -1.49384, -3.76678, 4.10325,
        ],
        3.969344631924639e+00,
        3.297394141930107e+01,
        3.673832696131706e-04,
    ),
    (
        &[
            0.467669, 0.490098, 0.36618, 1.51161, 1.631, 1.31158, 0.298134, 0.649716,
        ],
        &[
            -4.05443, -8.68394, -11.5475, -5.41767, -4.9071, -8.92803, -7.4136, -6.40244, -11.0722,
        ],
        9.300138342129159e+00,
        8.763453097104424e+00,
        7.848081087476697e-06,
    ),
    (
        &[
            6.84088, -2.21263, 5.91114, -3.80797, 1.88117, 0.610956, -1.86427, 4.76115, 2.35752,
            -2.152, -2.95493, -7.18423, 1.60178, 1.35565, 2.3939, 9.26262, -1.75699, -0.980081,
            3.83747, 3.89268, 3.60157, 8.37688,
        ],
        &[
            0.984248, 1.31615, 0.586573, 0.253577, 2.19964, 0.323274, 1.70413, -1.65384, 0.705484,
            1.38546, 1.86549,
        ],
        6.968207030827297e-01,
        2.584193565025096e+01,
        4.921362715225081e-01,
    ),
    (
        &[
            3.394, 3.08935, 2.52125, 3.63815, 3.38669, 2.75393, 4.32807, 2.26287, 4.12157, 4.34269,
            0.704048, 3.52182, 1.8111, 2.43158, 5.90563, 2.31792, 3.32342, 0.714645, 3.96564,
            4.60283, 1.73756, 2.93255, 2.65764, 3.43464, 2.74279, 4.01509, 2.27791, 3.16659,
            3.16452, 3.82623,
        ],
        &[-5.36901, -4.86817, -8.28449, 0.0734221],
        4.419710326230580e+00,
        3.081543088096133e+00,
        2.032825228445325e-02,
    ),
    (
        &[
            0.183785, -2.25329, -3.3424, 0.899087, -1.97535, -0.592334, -0.229236, 1.32529,
            0.14306, -0.768624, -1.78937, -1.69989, -4.37001, -1.65606, 1.14017, -2.5716, -1.89734,
        ],
        &[
            -2.19189, -1.99113, -3.40134, -4.7228, -2.16947, -5.08853, -0.969923, -1.13589,
        ],
        2.332247465756643e+00,
        1.423299757619604e+01,
        3.486040958499315e-02,
    ),
    (
        &[
            2.8604, 4.71949, 8.09082, 8.36093, 4.75138, 6.00442, 6.17381, 0.962097, 1.57931,
            5.72695, 4.25455, 3.72883, 1.80446, 1.38255, 1.57107, 5.50081, 7.50646, 4.30639,
            1.73012, 6.18286, 8.36085,
        ],
        &[-2.26896, -3.03402, -1.837],
        1.085137604896168e+01,
        1.437463519944095e+01,
        2.589374634171320e-08,
    ),
    (
        &[
            -3.61664, 1.85302, 3.76349, -1.95732, 3.37689, 1.78091, -5.37002, -2.76641, 2.44011,
            4.3245, -2.17175, 1.58258, -2.2958, 1.01571, 4.59351, -1.51788, 0.528968, -5.02173,
            4.35604, -0.336692,
        ],
        &[
            3.01479, 0.00342075, 8.10154, 7.34475, -0.750674, 3.29169, 2.84852, 0.0542887, 1.36549,
            3.76927, 2.89279, -1.77104, 1.54669, 0.981755, 4.64788, 1.83567, 5.18101, 1.52779,
            -1.55346, 1.22157, 3.2159, -0.668887, -0.143146, -2.58832, -2.90339, 3.16306, 2.10923,
        ],
        -1.747069528499280e+00,
        3.734304497582910e+01,
        8.884598946726116e-02,
    ),
    (
        &[
            0.0825772, -1.75585, -2.16687, -3.50953, -4.01115, -5.09945, -2.85151, -1.99849,
            -8.366, -2.68246, -4.43491, -3.81425, -3.83427, -3.49259, -3.62864, -3.19242,
        ],
        &[
            0.491476,
            0.293009,
            1.11882,
            -0.398181,
            2.34805,
            0.593168,
            -0.00427715,
            0.549827,
            1.57168,
            0.0147507,
            1.31533,
            2.3159,
            0.765119,
            1.42309,
            0.252911,
            -0.217144,
            0.230977,
            0.146752,
            0.321948,
            0.702822,
            0.918754,
            0.396193,
            2.10813,
            0.590965,
            1.05255,
        ],
        -8.810066799485712e+00,
        1.837042705956587e+01,
        5.120501192648125e-08,
    ),
    (
        &[3.81248, 0.233714, 2.76645, -2.02681, 2.66804, 2.3777],
        &[
            -5.74382, -4.04686, -3.76708, -1.16247, -4.15161, -5.09362, -4.44565, -3.6558,
            -3.98352, -5.00645, -3.69621, -4.78027, -5.21362, -4.96739, -5.81432, -5.24055,
            -6.1235, -5.76623, -5.63457, -5.66838,
        ],
        6.943643785022057e+00,
        5.882172831506953e+00,
        4.821051792958134e-04,
    ),
    (
        &[
            2.10193, 0.0708251, 3.41282, 4.57714, 0.00763442, 2.56034, 0.141695, 5.83503, 3.41364,
            2.71233, 5.15358, 2.27452, 0.903584, 3.81007, -1.04685, 1.957, 1.58131, 5.00941,
            2.51941, 5.40749, 2.8988,
        ],
        &[
            1.29487, -4.60202, -2.81239, -5.15964, -0.983062, 1.0257, 1.97606, 1.28103, -4.06104,
            -0.0993176, -5.20424, -5.8029, -5.55588, -4.16958, 6.02136, -3.51732, 0.272684,
            0.0553455, -2.50076, -11.1947, 3.4822, -3.17955,
        ],
        5.019527773700696e+00,
        3.136638915806605e+01,
        1.972492176431709e-05,
    ),
    (
        &[
            0.155779, 0.919777, 2.67574, -2.38751, 0.61883, -3.34421, 3.39237, -4.44802, 3.63766,
        ],
        &[
            -2.75888, -3.22752, -4.47762, -5.40914, -4.384, -0.782022, -0.205383, -1.3573,
            -3.13484, -6.40349, -6.64929, -2.13101,
        ],
        3.063648985890775e+00,
        1.384548246100623e+01,
        8.510213778180868e-03,
    ),
    (
        &[-3.64999, -2.58413, 6.98288, 0.809564, -0.470053, -3.32803],
        &[
            -0.352062, 3.11747, 3.34399, -0.704587, -1.07562, 0.744341, 4.22184, 0.971275, 4.89709,
            1.65211, 1.55474, 2.77301, 1.76555, 3.40177, 2.21673, 5.31735, 2.03798, 4.7294,
        ],
        -1.553841513970688e+00,
        5.774730895346685e+00,
        1.731249975793092e-01,
    ),
    (
        &[
            -2.02644, -1.44258, -2.0686, -1.48479, -1.70068, -2.37468, -1.50448, -1.38495,
            -1.78352, -1.83727, -2.38117, -2.08815, -1.83187, -1.90168, -1.90343, -1.83259,
            -1.52037, -1.8479, -1.71147, -2.36109, -1.90869, -1.67019, -2.14148, -2.28092,
            -1.50862, -1.86094,
        ],
        &[
            -1.53214, -4.13021, -5.78414, -0.683772, 3.00963, -3.41172, 1.58252, -2.48766, -1.6561,
            0.978301, -5.48632, 0.696432,
        ],
        -3.491267236344862e-01,
        1.111134530028942e+01,
        7.335206031373604e-01,
    ),
    (
        &[-4.01047, 2.79091, 3.78472, -0.250885],
        &[
            -7.13016, -6.167, -6.1703, -5.37738, -4.86352, -6.21558, -5.49206, -5.48089, -5.95769,
            -6.3048, -6.09893, -6.08114, -6.54916, -4.36286, -4.31269, -6.98783, -4.08414,
            -4.75697, -5.91104, -5.98407, -5.07482, -6.58826, -4.97227, -4.82037, -7.14968,
        ],
        3.570388119579301e+00,
        3.060975778413854e+00,
        3.634011190765630e-02,
    ),
    (
        &[
            6.4394, 6.41755, 5.9818, 5.07633, 4.99047, 4.56804, 4.2123, 3.98978, 7.59827, 7.59763,
            5.49746, 5.90476, 4.81786, 2.92277, 4.74453, 5.39793, 5.28367, 6.17433, 5.72789,
            5.73597, 5.36539, 6.04311, 5.04163, 6.08235, 2.96437, 5.88075, 5.348, 4.41116, 7.44184,
        ],
        &[
            -2.39891, -2.66747, 1.98224, 3.21944, 2.49661, 3.47129, 1.65133, 1.04299, -0.613025,
            2.8137, -0.626185, 0.498349, 3.21673, 1.0681, 3.95202, 0.128744, -0.0293855, 0.626195,
        ],
        8.601274452417481e+00,
        2.447757208849134e+01,
        7.272663099957816e-09,
    ),
    (
        &[
            4.36406, 2.18999, 10.5823, 4.98113, 3.16928, 4.09942, 3.01841, 3.871, 2.51457, 4.0971,
            1.25736, 7.881, 4.91807, 5.01949, -1.29104, 5.91284, 3.60222,
        ],
        &[
            -1.9705,
            -1.72425,
            0.140483,
            -1.40762,
            0.514211,
            -1.94118,
            -0.220088,
            -1.12799,
            -0.00591152,
            -1.55146,
            -0.60422,
            -1.18,
            -1.07523,
            -0.699303,
            -1.43502,
            -0.927378,
            -0.470419,
            -1.41729,
            -0.719814,
            -1.15482,
            -0.736233,
            -0.350685,
            -1.78519,
            0.913666,
            -0.758948,
            -1.16135,
            -1.1755,
            -0.612826,
        ],
        7.787650217983146e+00,
        1.747767038603628e+01,
        4.368407464495370e-07,
    ),
    (
        &[
            -1.07157, 2.76472, 0.200641, 0.64816, 1.03931, -5.02178, -2.21122, 0.451876, 6.26373,
            -0.746655, -0.158412, 0.996633, -0.0727294, 3.84303,
        ],
        &[
            1.64356, 1.24871, 1.41613, -2.37515, 2.79655, -6.25537, 0.726946, -3.94053, 1.10713,
            -3.17161, -0.713148, -5.22342, 3.15408, 2.2944, -0.685851, -2.67921, -2.77344, 1.44223,
            1.01998, 2.26952, 3.39957, -4.89919, 0.118586, -1.64557, 3.50129,
        ],
        8.963700110149655e-01,
        2.890833920194837e+01,
        3.774592867077319e-01,
    ),
    (
        &[
            4.9224, 1.33729, 2.74675, -0.685081, -1.4906, -0.648652, 5.71701, 7.08425, -5.81243,
            -9.10071, 0.778633, -4.41042, 0.823163, 4.7501,
        ],
        &[3.54776, 1.91013, 1.18094, -7.33548],
        2.209172827511286e-01,
        4.661893909638599e+00,
        8.345031036983909e-01,
    ),
    (
        &[
            2.77044, 2.25364, 0.554262, 5.17901, 1.09297, 2.12761, 0.839396, -1.89029, 2.86234,
            0.618416, -1.21193, -0.206439, -1.22434, 2.49039, 0.717894,
        ],
        &[
            -1.25629, 2.19546, 1.5747, -0.0232372, -0.458205, 0.230324, 0.665732, -1.29944,
            0.641448, -1.21968, 0.872065, 0.302947, -0.22889,
        ],
        1.724727259343375e+00,
        2.279330843339185e+01,
        9.811333792703757e-02,
    ),
    (
        &[
            -0.207771, 0.0683164, 0.133216, 0.386543, -0.222455, -0.467723, -0.601969, 0.373319,
            -0.227438, -0.288371, -0.462433, 0.511445, -1.01618, 0.316804, -0.577739, -0.40092,
            0.288551, -0.620832, 0.21164, 0.0807272, 0.104639, -0.287754, -0.701791, 0.0981672,
            -0.501197, 0.209159, -1.09554, -0.729011, 0.211661, 0.84194,
        ],
        &[
            -6.51906, -2.77433, -1.50921, -5.97895, 1.85458, -1.8177, 0.493484, -3.37226, 3.97261,
            -0.0839352,
        ],
        1.359904397766541e+00,
        9.122793599556669e+00,
        2.065159506803830e-01,
    ),
    (
        &[
            -7.60666, -9.56434, -8.88753, -8.4393, -8.7289, -8.76618, -10.0099, -12.0765, -7.26117,
        ],
        &[
            3.9523, -4.64405, -2.42196, -2.92045, 2.49173, -2.65916, 1.19353, 4.05659, 1.61486,
            -5.05941, -2.03553,
        ],
        -7.599581625631309e+00,
        1.407338027517457e+01,
        2.397776564671131e-06,
    ),
    (
        &[-2.35581, -0.267078, 0.650878, 0.0687372, 0.657056],
        &[-2.97225, -4.69932, 0.112383, -2.32367],
        1.947446210960766e+00,
        4.806409378010645e+00,
        1.113407401456297e-01,
    ),
];
