//! Frozen reference values generated by tools/gen_oracle.py (mpmath).
//! Do not edit by hand; regenerate with the script instead.
#![allow(clippy::excessive_precision, clippy::approx_constant, dead_code)]

/// (x, gamma(x))
pub const GAMMA_CASES: &[(f64, f64)] = &[
    (-19.5, 5.8110459775022365e-18),
    (-17.25, 6.0960767826555663e-15),
    (-12.5, -1.8366064838592809e-9),
    (-7.75, 0.00018747824170042472),
    (-5.5, 0.010912654781909863),
    (-3.3, 0.43851739219876281),
    (-2.5, -0.94530872048294188),
    (-1.5, 2.3632718012073547),
    (-0.5, -3.5449077018110321),
    (-0.25, -4.9016668098607106),
    (0.1, 9.5135076986687318),
    (0.25, 3.6256099082219083),
    (0.3, 2.9915689876875906),
    (0.5, 1.7724538509055160),
    (0.75, 1.2254167024651776),
    (1.0, 1.0000000000000000),
    (1.4618, 0.88560320648302025),
    (1.5, 0.88622692545275801),
    (1.75, 0.91906252684888323),
    (2.0, 1.0000000000000000),
    (2.5, 1.3293403881791370),
    (3.0, 2.0000000000000000),
    (4.2, 7.7566895357931776),
    (5.0, 24.000000000000000),
    (6.5, 287.88527781504436),
    (8.0, 5040.0000000000000),
    (10.5, 1133278.3889487856),
    (12.0, 39916800.000000000),
    (15.75, 660355655453.76470),
    (20.0, 1.2164510040883200e+17),
    (34.5, 5.0446208683494513e+37),
    (50.0, 6.0828186403426756e+62),
    (77.25, 5.5785157112598324e+111),
    (100.0, 9.3326215443944153e+155),
    (125.5, 1.6822345873896489e+208),
    (150.0, 3.8089226376305697e+260),
    (160.25, 1.0473977871884766e+283),
    (169.5, 3.2814704510678464e+303),
    (170.0, 4.2690680090047053e+304),
];

/// (alpha, beta, z_re, z_im, e_re, e_im)
pub const ML_CASES: &[(f64, f64, f64, f64, f64, f64)] = &[
    (1.0, 1.0, 2.0, 0.0, 7.3890560989306502, 0.0),
    (0.7, 0.3, 0.0, 0.0, 0.33427275256419055, 0.0),
    (0.5, 1.0, -1.0, 0.0, 0.42758357615580700, 0.0),
    (0.25, 1.0, -3.9, 0.0, 0.17679968729544564, 0.0),
    (0.25, 1.0, -1.0, 0.0, 0.46385276080171329, 0.0),
    (0.25, 1.0, -0.2, 0.0, 0.81713697085675725, 0.0),
    (0.25, 1.0, 0.5, 0.0, 2.0796142210090509, 0.0),
    (0.25, 1.0, 2.0, 0.0, 35544441.509930782, 0.0),
    (0.25, 1.0, 1.0, 2.0, -0.066294267010061382, 0.41296737541865762),
    (0.25, 1.0, -2.0, 1.5, 0.23095623453287662, 0.12541381597068293),
    (0.3, 0.5, -3.9, 0.0, 0.058429907182594390, 0.0),
    (0.3, 0.5, -1.0, 0.0, 0.19751221034659768, 0.0),
    (0.3, 0.5, -0.2, 0.0, 0.42691917011541356, 0.0),
    (0.3, 0.5, 0.5, 0.0, 1.5196111396142772, 0.0),
    (0.3, 0.5, 2.0, 0.0, 252353.54226878795, 0.0),
    (0.3, 0.5, 1.0, 2.0, -0.083262840468138558, 0.088667738353944720),
    (0.3, 0.5, -2.0, 1.5, 0.075601282630627642, 0.054053629112343820),
    (0.5, 0.5, -3.9, 0.0, 0.016964275305066330, 0.0),
    (0.5, 0.5, -1.0, 0.0, 0.13660600739194928, 0.0),
    (0.5, 0.5, -0.2, 0.0, 0.40238567956744014, 0.0),
    (0.5, 0.5, 0.5, 0.0, 1.5403698281390348, 0.0),
    (0.5, 0.5, 2.0, 0.0, 218.44599836350370, 0.0),
    (0.5, 0.5, 1.0, 2.0, 0.065153032840833988, -0.26379567626300763),
    (0.5, 0.5, -2.0, 1.5, 0.018572709276046928, 0.036405677559179085),
    (0.5, 1.0, -3.9, 0.0, 0.14031418160068973, 0.0),
    (0.5, 1.0, -1.0, 0.0, 0.42758357615580700, 0.0),
    (0.5, 1.0, -0.2, 0.0, 0.80901951990158074, 0.0),
    (0.5, 1.0, 0.5, 0.0, 1.9523604891825571, 0.0),
    (0.5, 1.0, 2.0, 0.0, 108.94090438997797, 0.0),
    (0.5, 1.0, 1.0, 2.0, -0.20532558064658751, 0.14685548503016739),
    (0.5, 1.0, -2.0, 1.5, 0.18333476238114998, 0.11929823300627294),
    (0.7, 1.0, -3.9, 0.0, 0.10265476254945391, 0.0),
    (0.7, 1.0, -1.0, 0.0, 0.39961197811559938, 0.0),
    (0.7, 1.0, -0.2, 0.0, 0.80876712831304488, 0.0),
    (0.7, 1.0, 0.5, 0.0, 1.8249850568512025, 0.0),
    (0.7, 1.0, 2.0, 0.0, 20.966433131481951, 0.0),
    (0.7, 1.0, 1.0, 2.0, -1.4647439477336516, 0.068060165274960151),
    (0.7, 1.0, -2.0, 1.5, 0.13135404580505478, 0.11624861355897392),
    (0.8, 0.5, -3.9, 0.0, -0.054984515188861834, 0.0),
    (0.8, 0.5, -1.0, 0.0, 0.032700864517895563, 0.0),
    (0.8, 0.5, -0.2, 0.0, 0.37554405068955063, 0.0),
    (0.8, 0.5, 0.5, 0.0, 1.4467552781566312, 0.0),
    (0.8, 0.5, 2.0, 0.0, 20.885530684421946, 0.0),
    (0.8, 0.5, 1.0, 2.0, -3.2810251965556699, -0.87729477426621605),
    (0.8, 0.5, -2.0, 1.5, -0.097781761533085405, -0.0076289511125270402),
    (0.9, 0.9, -3.9, 0.0, 0.021449894763709115, 0.0),
    (0.9, 0.9, -1.0, 0.0, 0.30814879777662194, 0.0),
    (0.9, 0.9, -0.2, 0.0, 0.74491812471192171, 0.0),
    (0.9, 0.9, 0.5, 0.0, 1.6742480910659137, 0.0),
    (0.9, 0.9, 2.0, 0.0, 10.415849710921112, 0.0),
    (0.9, 0.9, 1.0, 2.0, -2.0781710085602910, 1.7916116898270492),
    (0.9, 0.9, -2.0, 1.5, 0.0094714480453376200, 0.097555629614105729),
    (1.0, 1.0, -3.9, 0.0, 0.020241911445804388, 0.0),
    (1.0, 1.0, -1.0, 0.0, 0.36787944117144232, 0.0),
    (1.0, 1.0, -0.2, 0.0, 0.81873075307798186, 0.0),
    (1.0, 1.0, 0.5, 0.0, 1.6487212707001281, 0.0),
    (1.0, 1.0, 2.0, 0.0, 7.3890560989306502, 0.0),
    (1.0, 1.0, 1.0, 2.0, -1.1312043837568136, 2.4717266720048189),
    (1.0, 1.0, -2.0, 1.5, 0.0095732392230639650, 0.13499626653916089),
    (1.0, 0.5, -3.9, 0.0, -0.11897589321335903, 0.0),
    (1.0, 0.5, -1.0, 0.0, -0.042968122293637442, 0.0),
    (1.0, 0.5, -0.2, 0.0, 0.36632830925736490, 0.0),
    (1.0, 0.5, 0.5, 0.0, 1.3600840063682731, 0.0),
    (1.0, 0.5, 2.0, 0.0, 10.538428671807383, 0.0),
    (1.0, 0.5, 1.0, 2.0, -3.3174679864977975, 2.1911097867722992),
    (1.0, 0.5, -2.0, 1.5, -0.23841669029157596, -0.044235897087752578),
    (1.0, 1.0, -20.0, 0.0, 2.0611536224385578e-9, 0.0),
    (1.0, 1.0, -14.0, 0.0, 8.3152871910356788e-7, 0.0),
    (1.0, 1.0, -8.0, 0.0, 0.00033546262790251184, 0.0),
    (1.0, 1.0, 8.0, 0.0, 2980.9579870417283, 0.0),
    (1.0, 1.0, 14.0, 0.0, 1202604.2841647768, 0.0),
    (1.0, 1.0, 20.0, 0.0, 485165195.40979028, 0.0),
    (1.0, 1.0, 30.0, 0.0, 10686474581524.462, 0.0),
    (1.0, 1.0, -10.0, 10.0, -3.8093788485771707e-5, -2.4698520223686372e-5),
    (1.0, 1.0, 10.0, -10.0, -18481.780334598649, 11982.862390657456),
    (1.0, 1.0, -10.0, -10.0, -3.8093788485771707e-5, 2.4698520223686372e-5),
    (0.3, 0.5, -6.0, 0.0, 0.037840553532361441, 0.0),
    (0.3, 0.5, -9.0, 0.0, 0.025025258536153509, 0.0),
    (0.3, 0.5, -15.0, 0.0, 0.014862596869670304, 0.0),
    (0.3, 0.5, -25.0, 0.0, 0.0088461284532908281, 0.0),
    (0.3, 0.5, -60.0, 0.0, 0.0036551831173485299, 0.0),
    (0.3, 0.5, -150.0, 0.0, 0.0014562457877116271, 0.0),
    (0.3, 0.5, -400.0, 0.0, 0.00054514288446393151, 0.0),
    (0.3, 0.5, -1000.0, 0.0, 0.00021791819371576050, 0.0),
    (0.3, 1.0, -6.0, 0.0, 0.11646113307019864, 0.0),
    (0.3, 1.0, -9.0, 0.0, 0.080198337102162867, 0.0),
    (0.3, 1.0, -15.0, 0.0, 0.049389398230286153, 0.0),
    (0.3, 1.0, -25.0, 0.0, 0.030101147530311265, 0.0),
    (0.3, 1.0, -60.0, 0.0, 0.012714990320585849, 0.0),
    (0.3, 1.0, -150.0, 0.0, 0.0051158827418023194, 0.0),
    (0.3, 1.0, -400.0, 0.0, 0.0019231419575059617, 0.0),
    (0.3, 1.0, -1000.0, 0.0, 0.00076993246495257768, 0.0),
    (0.5, 0.5, -6.0, 0.0, 0.0075301767445261606, 0.0),
    (0.5, 0.5, -9.0, 0.0, 0.0034200672077841296, 0.0),
    (0.5, 0.5, -15.0, 0.0, 0.0, 0.0),
    (0.5, 0.5, -25.0, 0.0, 0.0, 0.0),
    (0.5, 0.5, -60.0, 0.0, 0.0, 0.0),
    (0.5, 0.5, -150.0, 0.0, 0.0, 0.0),
    (0.5, 0.5, -400.0, 0.0, 0.0, 0.0),
    (0.5, 0.5, -1000.0, 0.0, 0.0, 0.0),
    (0.5, 1.0, -6.0, 0.0, 0.092776567800538354, 0.0),
    (0.5, 1.0, -9.0, 0.0, 0.062307724037774684, 0.0),
    (0.5, 1.0, -15.0, 0.0, 0.037612638903183752, 0.0),
    (0.5, 1.0, -25.0, 0.0, 0.022567583341910251, 0.0),
    (0.5, 1.0, -60.0, 0.0, 0.0094031597257959381, 0.0),
    (0.5, 1.0, -150.0, 0.0, 0.0037612638903183752, 0.0),
    (0.5, 1.0, -400.0, 0.0, 0.0014104739588693907, 0.0),
    (0.5, 1.0, -1000.0, 0.0, 0.00056418958354775629, 0.0),
    (0.7, 0.5, -6.0, 0.0, -0.023590323802611795, 0.0),
    (0.7, 0.5, -9.0, 0.0, -0.017230760141150538, 0.0),
    (0.7, 0.5, -15.0, 0.0, -0.010890584099142693, 0.0),
    (0.7, 0.5, -25.0, 0.0, -0.0066906832895667110, 0.0),
    (0.7, 0.5, -60.0, 0.0, -0.0028347879886524608, 0.0),
    (0.7, 0.5, -150.0, 0.0, -0.0011409152114980232, 0.0),
    (0.7, 0.5, -400.0, 0.0, -0.00042887045568990341, 0.0),
    (0.7, 0.5, -1000.0, 0.0, -0.00017169236803211849, 0.0),
    (0.7, 1.0, -6.0, 0.0, 0.063261334860688798, 0.0),
    (0.7, 1.0, -9.0, 0.0, 0.040531197267350678, 0.0),
    (0.7, 1.0, -15.0, 0.0, 0.023501440278040013, 0.0),
    (0.7, 1.0, -25.0, 0.0, 0.013806344377169999, 0.0),
    (0.7, 1.0, -60.0, 0.0, 0.0056462751668804419, 0.0),
    (0.7, 1.0, -150.0, 0.0, 0.0022404527490784260, 0.0),
    (0.7, 1.0, -400.0, 0.0, 0.00083736223985494916, 0.0),
    (0.7, 1.0, -1000.0, 0.0, 0.00033454145717409955, 0.0),
    (0.8, 1.0, -6.0, 0.0, 0.045741376541625765, 0.0),
    (0.8, 1.0, -9.0, 0.0, 0.028115177443944767, 0.0),
    (0.8, 1.0, -15.0, 0.0, 0.015843800747790801, 0.0),
    (0.8, 1.0, -25.0, 0.0, 0.0091709970964705318, 0.0),
    (0.8, 1.0, -60.0, 0.0, 0.0037073280359413781, 0.0),
    (0.8, 1.0, -150.0, 0.0, 0.0014643001893134476, 0.0),
    (0.8, 1.0, -400.0, 0.0, 0.00054625869466023209, 0.0),
    (0.8, 1.0, -1000.0, 0.0, 0.00021809575522748722, 0.0),
    (0.9, 0.5, -6.0, 0.0, -0.054363052395387047, 0.0),
    (0.9, 0.5, -9.0, 0.0, -0.034196535143236929, 0.0),
    (0.9, 0.5, -15.0, 0.0, -0.019387796675147188, 0.0),
    (0.9, 0.5, -25.0, 0.0, -0.011255476725722143, 0.0),
    (0.9, 0.5, -60.0, 0.0, -0.0045623090729313061, 0.0),
    (0.9, 0.5, -150.0, 0.0, -0.0018041689346336648, 0.0),
    (0.9, 0.5, -400.0, 0.0, -0.00067338989385937320, 0.0),
    (0.9, 0.5, -1000.0, 0.0, -0.00026890289260739460, 0.0),
    (0.9, 1.0, -6.0, 0.0, 0.025782769712366070, 0.0),
    (0.9, 1.0, -9.0, 0.0, 0.014646307996637194, 0.0),
    (0.9, 1.0, -15.0, 0.0, 0.0079286024323444488, 0.0),
    (0.9, 1.0, -25.0, 0.0, 0.0045121471218401898, 0.0),
    (0.9, 1.0, -60.0, 0.0, 0.0018022340312846150, 0.0),
    (0.9, 1.0, -150.0, 0.0, 0.00070862302364685838, 0.0),
    (0.9, 1.0, -400.0, 0.0, 0.00026387963565325517, 0.0),
    (0.9, 1.0, -1000.0, 0.0, 0.00010528835943209591, 0.0),
    (1.0, 1.0, -6.0, 0.0, 0.0024787521766663584, 0.0),
    (1.0, 1.0, -9.0, 0.0, 0.00012340980408667955, 0.0),
    (1.0, 1.0, -15.0, 0.0, 3.0590232050182579e-7, 0.0),
    (1.0, 1.0, -25.0, 0.0, 1.3887943864964021e-11, 0.0),
    (1.0, 1.0, -60.0, 0.0, 8.7565107626965203e-27, 0.0),
    (1.0, 1.0, -150.0, 0.0, 0.0, 0.0),
    (1.0, 1.0, -400.0, 0.0, 0.0, 0.0),
    (1.0, 1.0, -1000.0, 0.0, 0.0, 0.0),
    (1.0, 0.5, -6.0, 0.0, -0.068989946469163509, 0.0),
    (1.0, 0.5, -9.0, 0.0, -0.039282367565044873, 0.0),
    (1.0, 0.5, -15.0, 0.0, -0.021111699423598890, 0.0),
    (1.0, 0.5, -25.0, 0.0, -0.012040225606926655, 0.0),
    (1.0, 0.5, -60.0, 0.0, -0.0048243261592027317, 0.0),
    (1.0, 0.5, -150.0, 0.0, -0.0018997592446560666, 0.0),
    (1.0, 0.5, -400.0, 0.0, -0.00070789829337777377, 0.0),
    (1.0, 0.5, -1000.0, 0.0, -0.00028251899553625572, 0.0),
    (0.25, 1.0, -6.0, 0.0, 0.12161314800500527, 0.0),
    (0.25, 1.0, -9.0, 0.0, 0.084085148803648428, 0.0),
    (0.25, 1.0, -15.0, 0.0, 0.051977476505695714, 0.0),
    (0.25, 1.0, -25.0, 0.0, 0.031756906432675243, 0.0),
    (0.25, 1.0, -60.0, 0.0, 0.013445373247239405, 0.0),
    (0.25, 1.0, -150.0, 0.0, 0.0054153328912123211, 0.0),
    (0.25, 1.0, -400.0, 0.0, 0.0020366004724682157, 0.0),
    (0.25, 1.0, -1000.0, 0.0, 0.00081548502533037805, 0.0),
    (0.5, 1.0, 9.0, 0.0, 3.0121946291700611e+35, 0.0),
    (0.5, 1.0, 25.0, 0.0, 5.4335189393274734e+271, 0.0),
    (0.5, 0.5, 16.0, 0.0, 4.8365685280131313e+112, 0.0),
    (0.7, 1.0, 12.0, 0.0, 1871188388856708.8, 0.0),
    (0.8, 1.0, 40.0, 0.0, 6.0900660493512965e+43, 0.0),
    (0.9, 1.0, 60.0, 0.0, 1.3006806597345565e+41, 0.0),
    (1.0, 1.0, 50.0, 0.0, 5.1847055285870725e+21, 0.0),
    (1.0, 0.5, 40.0, 0.0, 1.4887071417029623e+18, 0.0),
    (0.5, 1.0, 5.656854249492381, 5.65685424949238, 0.73346655073526399, 1.8895215130209561),
    (0.5, 1.0, 4.898587196589413e-16, 8.0, -4.4237283505796719e-18, 0.071088111744480880),
    (0.5, 1.0, -5.65685424949238, 5.656854249492381, 0.050247910123832190, 0.049469436627348566),
    (0.5, 1.0, -7.901506724761101, 1.2514757203218478, 0.069173426159786740, 0.010790910539766258),
    (0.5, 1.0, 14.142135623730951, 14.14213562373095, -1.0705646311163823, -1.6819166320635090),
    (0.5, 1.0, 1.2246467991473533e-15, 20.0, -1.7338507582139294e-18, 0.028244874092056703),
    (0.5, 1.0, -14.14213562373095, 14.142135623730951, 0.019971953831281766, 0.019922087214892774),
    (0.5, 1.0, -19.753766811902754, 3.1286893008046195, 0.027830848268318686, 0.0043970190125298110),
    (0.5, 1.0, 31.81980515339464, 31.819805153394636, -0.49113673585970773, 1.9498465660763216),
    (0.5, 1.0, 2.7554552980815448e-15, 45.0, -7.6827266972372966e-19, 0.012540644287445887),
    (0.5, 1.0, -31.819805153394636, 31.81980515339464, 0.0088675713691588739, 0.0088631934057506751),
    (0.5, 1.0, -44.445975326781195, 7.039550926810394, 0.012380431641031728, 0.0019599005534234134),
    (0.7, 0.5, 5.656854249492381, 5.65685424949238, 22536.460348409310, -19601.674774495386),
    (0.7, 0.5, 4.898587196589413e-16, 8.0, -0.0013216941842493187, -0.022332141182376354),
    (0.7, 0.5, -5.65685424949238, 5.656854249492381, -0.015955297095932345, -0.013087154303866359),
    (0.7, 0.5, -7.901506724761101, 1.2514757203218478, -0.018925537540016038, -0.0024370143243261938),
    (0.7, 0.5, 14.142135623730951, 14.14213562373095, -461526526074617.37, 168966425135271.12),
    (0.7, 0.5, 1.2246467991473533e-15, 20.0, -0.00023212538013930602, -0.0086434583741329195),
    (0.7, 0.5, -14.14213562373095, 14.142135623730951, -0.0061161824528801798, -0.0057987726387542890),
    (0.7, 0.5, -19.753766811902754, 3.1286893008046195, -0.0082070352222192907, -0.0012435501108115709),
    (0.7, 0.5, 31.81980515339464, 31.819805153394636, 4.2877568534950281e+44, 2.0227193092886078e+44),
    (0.7, 0.5, 2.7554552980815448e-15, 45.0, -4.6548203440450737e-5, -0.0038222472506291444),
    (0.7, 0.5, -31.819805153394636, 31.81980515339464, -0.0027029055213430327, -0.0026493025720822296),
    (0.7, 0.5, -44.445975326781195, 7.039550926810394, -0.0037216996276412771, -0.00058049700094798109),
    (0.8, 1.0, 5.656854249492381, 5.65685424949238, 419.02309965734360, -2163.6622695112474),
    (0.8, 1.0, 4.898587196589413e-16, 8.0, 0.0030841190836526209, 0.025515502049647991),
    (0.8, 1.0, -5.65685424949238, 5.656854249492381, 0.018608245433428271, 0.024017489269476601),
    (0.8, 1.0, -7.901506724761101, 1.2514757203218478, 0.031643116326086318, 0.0059416871405542933),
    (0.8, 1.0, 14.142135623730951, 14.14213562373095, -16431525301.337739, -11468749367.606558),
    (0.8, 1.0, 1.2246467991473533e-15, 20.0, -0.00067332990616423097, 0.010844367658952218),
    (0.8, 1.0, -14.14213562373095, 14.142135623730951, 0.0076651869004239833, 0.0084108089199136979),
    (0.8, 1.0, -19.753766811902754, 3.1286893008046195, 0.011444430874384411, 0.0019356823150616661),
    (0.8, 1.0, 31.81980515339464, 31.819805153394636, -1.4661213334837505e+28, 7.6484137522666946e+27),
    (0.8, 1.0, 2.7554552980815448e-15, 45.0, -0.00013346654545114716, 0.0048364263622974672),
    (0.8, 1.0, -31.819805153394636, 31.81980515339464, 0.0034197592051599217, 0.0035592838122972678),
    (0.8, 1.0, -44.445975326781195, 7.039550926810394, 0.0049117636378307499, 0.00080044514886948182),
    (0.9, 0.9, 5.656854249492381, 5.65685424949238, 41.441546846835279, 910.74899880493002),
    (0.9, 0.9, 4.898587196589413e-16, 8.0, -0.19098444107251546, -0.15268168033102200),
    (0.9, 0.9, -5.65685424949238, 5.656854249492381, -0.00060928223723991746, 0.0015639890756207825),
    (0.9, 0.9, -7.901506724761101, 1.2514757203218478, 0.0023175305310641016, 0.0010620543780221186),
    (0.9, 0.9, 14.142135623730951, 14.14213562373095, -82032414.945048621, 48284395.910018028),
    (0.9, 0.9, 1.2246467991473533e-15, 20.0, -0.010125669455725495, 0.0070960365874852939),
    (0.9, 0.9, -14.14213562373095, 14.142135623730951, -3.5277236106497480e-5, 0.00026303722859446611),
    (0.9, 0.9, -19.753766811902754, 3.1286893008046195, 0.00026637453612923110, 9.6001876311582495e-5),
    (0.9, 0.9, 31.81980515339464, 31.819805153394636, -1.9462583731430994e+19, 1.6362917205182141e+19),
    (0.9, 0.9, 2.7554552980815448e-15, 45.0, -4.3382381488525483e-5, -1.4187387883542586e-5),
    (0.9, 0.9, -31.819805153394636, 31.81980515339464, -2.7112625070297545e-6, 4.9133516732442236e-5),
    (0.9, 0.9, -44.445975326781195, 7.039550926810394, 4.7726386178340737e-5, 1.6170412631961159e-5),
];

/// (alpha, beta, z, psi) for the Wright function with negative first parameter
pub const WRIGHT_CASES: &[(f64, f64, f64, f64)] = &[
    (0.5, 0.5, 0.0, 0.56418958354775629),
    (0.5, 0.5, 1.0, 0.43939128946772240),
    (0.3, 0.7, 2.5, 0.10502855072317222),
    (0.25, 0.0, 1.433285, 0.095546576476611616),
    (0.25, 0.0, 5.733139, 0.0044693331702649933),
    (0.25, 0.0, 12.899562, 6.1727752516684294e-7),
    (0.25, 0.0, 20.065985, 8.6971074610586972e-12),
    (0.25, 0.0, 25.799124, 3.6233038602933245e-16),
    (0.25, 0.0, 28.522365, 2.2336843855833989e-18),
    (0.25, 0.25, 1.433285, 0.17050556416464562),
    (0.25, 0.25, 5.733139, 0.0041609371608694660),
    (0.25, 0.25, 12.899562, 4.2502557261991580e-7),
    (0.25, 0.25, 20.065985, 5.1294918385244178e-12),
    (0.25, 0.25, 25.799124, 1.9599560814643284e-16),
    (0.25, 0.25, 28.522365, 1.1675640269013067e-18),
    (0.25, 0.5, 1.433285, 0.22933960975882845),
    (0.25, 0.5, 5.733139, 0.0036789267650871377),
    (0.25, 0.5, 12.899562, 2.8755165558113043e-7),
    (0.25, 0.5, 20.065985, 2.9960169540685437e-12),
    (0.25, 0.5, 25.799124, 1.0528463125066937e-16),
    (0.25, 0.5, 28.522365, 6.0656349435561815e-19),
    (0.25, 1.0, 1.433285, 0.28190866897347307),
    (0.25, 1.0, 5.733139, 0.0025503275029947599),
    (0.25, 1.0, 12.899562, 1.2550521295813522e-7),
    (0.25, 1.0, 20.065985, 9.9434547720733230e-13),
    (0.25, 1.0, 25.799124, 2.9779901079189448e-17),
    (0.25, 1.0, 28.522365, 1.6086048243101050e-19),
    (0.25, -0.2, 1.433285, 0.031213617866884262),
    (0.25, -0.2, 5.733139, 0.0045167765396672798),
    (0.25, -0.2, 12.899562, 8.2068502217855554e-7),
    (0.25, -0.2, 20.065985, 1.3171339075203491e-11),
    (0.25, -0.2, 25.799124, 5.8930982393475552e-16),
    (0.25, -0.2, 28.522365, 3.7362806590701422e-18),
    (0.25, -0.4, 1.433285, -0.028414295996109026),
    (0.25, -0.4, 5.733139, 0.0043252074726115203),
    (0.25, -0.4, 12.899562, 1.0767879512337500e-6),
    (0.25, -0.4, 20.065985, 1.9811932481315816e-11),
    (0.25, -0.4, 25.799124, 9.5394129105189739e-16),
    (0.25, -0.4, 28.522365, 6.2251004458641864e-18),
    (0.25, 1.5, 1.433285, 0.25947640418001077),
    (0.25, 1.5, 5.733139, 0.0015605991933731438),
    (0.25, 1.5, 12.899562, 5.1767986636144502e-8),
    (0.25, 1.5, 20.065985, 3.1891919712648340e-13),
    (0.25, 1.5, 25.799124, 8.2129054300104131e-18),
    (0.25, 1.5, 28.522365, 4.1714535585907346e-20),
    (0.5, 0.0, 0.643817, 0.16373959301277400),
    (0.5, 0.0, 2.575267, 0.13840668488869031),
    (0.5, 0.0, 5.794351, 0.00036990863181387855),
    (0.5, 0.0, 9.013434, 0.016096080141002987),
    (0.5, 0.0, 11.588701, -207992772.16394527),
    (0.5, 0.0, 12.811953, -15945190778418.677),
    (0.5, 0.25, 0.643817, 0.35595583616175262),
    (0.5, 0.25, 2.575267, 0.12576434163735681),
    (0.5, 0.25, 5.794351, 0.00021886288302131507),
    (0.5, 0.25, 9.013434, 0.0016810254459223801),
    (0.5, 0.25, 11.588701, -14950918.779058532),
    (0.5, 0.25, 12.811953, -925202506758.45982),
    (0.5, 0.5, 0.643817, 0.50865259231357358),
    (0.5, 0.5, 2.575267, 0.10748919229632524),
    (0.5, 0.5, 5.794351, 0.00012767905562325153),
    (0.5, 0.5, 9.013434, -0.0012562795658629059),
    (0.5, 0.5, 11.588701, -35895787.140240354),
    (0.5, 0.5, 12.811953, -2489111656656.6670),
    (0.5, 1.0, 0.643817, 0.64893128732919061),
    (0.5, 1.0, 2.575267, 0.068608565613409504),
    (0.5, 1.0, 5.794351, 4.1813265142689671e-5),
    (0.5, 1.0, 9.013434, -0.00028119189926421437),
    (0.5, 1.0, 11.588701, -6242494.2035857837),
    (0.5, 1.0, 12.811953, 227351156026.04736),
    (0.5, -0.2, 0.643817, 0.0017385791157727995),
    (0.5, -0.2, 2.575267, 0.14089121168271164),
    (0.5, -0.2, 5.794351, 0.00055677092619790541),
    (0.5, -0.2, 9.013434, 0.041999498710780948),
    (0.5, -0.2, 11.588701, -591561486.14822564),
    (0.5, -0.2, 12.811953, -47032250786115.253),
    (0.5, -0.4, 0.643817, -0.14345941512673129),
    (0.5, -0.4, 2.575267, 0.13316480831806885),
    (0.5, -0.4, 5.794351, 0.00082928083710459792),
    (0.5, -0.4, 9.013434, 0.037374679465195560),
    (0.5, -0.4, 11.588701, -582801019.61013577),
    (0.5, -0.4, 12.811953, -48003356125105.025),
    (0.5, 1.5, 0.643817, 0.59951219001272965),
    (0.5, 1.5, 2.575267, 0.038293009651102227),
    (0.5, 1.5, 5.794351, 1.3077376553694015e-5),
    (0.5, 1.5, 9.013434, -6.3503269065698559e-5),
    (0.5, 1.5, 11.588701, 550824.53910806698),
    (0.5, 1.5, 12.811953, 36003804202.822289),
    (0.75, 0.0, 0.222623, 0.057572941982733158),
    (0.75, 0.0, 0.890492, 0.38801971329274504),
    (0.75, 0.0, 2.003608, 0.33478219517345449),
    (0.75, 0.0, 3.116723, 263.58877416513370),
    (0.75, 0.0, 4.007215, -126570136974.15547),
    (0.75, 0.0, 4.430199, -2635631268836473.0),
    (0.75, 0.25, 0.222623, 0.34481577664322290),
    (0.75, 0.25, 0.890492, 0.58098176931815228),
    (0.75, 0.25, 2.003608, 0.22278622394081571),
    (0.75, 0.25, 3.116723, 112.76321279974028),
    (0.75, 0.25, 4.007215, -42114082381.955370),
    (0.75, 0.25, 4.430199, -793231867262688.95),
    (0.75, 0.5, 0.222623, 0.60882504710112482),
    (0.75, 0.5, 0.890492, 0.66949041484774524),
    (0.75, 0.5, 2.003608, 0.14294219481299881),
    (0.75, 0.5, 3.116723, 23.382012526231561),
    (0.75, 0.5, 4.007215, -5391108827.8410475),
    (0.75, 0.5, 4.430199, -239579046114686.11),
    (0.75, 1.0, 0.222623, 0.93114289596429157),
    (0.75, 1.0, 0.890492, 0.62027524922810785),
    (0.75, 1.0, 2.003608, 0.053922984832691275),
    (0.75, 1.0, 3.116723, -1.2387958006351552),
    (0.75, 1.0, 4.007215, 844810458.28936568),
    (0.75, 1.0, 4.430199, -6978760809733.4233),
    (0.75, -0.2, 0.222623, -0.14910886500534366),
    (0.75, -0.2, 0.890492, 0.15745363374309079),
    (0.75, -0.2, 2.003608, 0.44912433527155819),
    (0.75, -0.2, 3.116723, 550.91138621554128),
    (0.75, -0.2, 4.007215, -321964543796.41635),
    (0.75, -0.2, 4.430199, -4165169223595852.2),
    (0.75, -0.4, 0.222623, -0.29628316704402614),
    (0.75, -0.4, 0.890492, -0.12441687489195068),
    (0.75, -0.4, 2.003608, 0.58154410757183044),
    (0.75, -0.4, 3.116723, 674.80841072485524),
    (0.75, -0.4, 4.007215, -530174707297.84812),
    (0.75, -0.4, 4.430199, -13124942462311637.),
    (0.75, 1.5, 0.222623, 0.94713420149845069),
    (0.75, 1.5, 0.890492, 0.43927850705040648),
    (0.75, 1.5, 2.003608, 0.018540965814318238),
    (0.75, 1.5, 3.116723, -0.87400512607091440),
    (0.75, 1.5, 4.007215, 220162247.57679735),
    (0.75, 1.5, 4.430199, 3437699707161.0460),
    (0.9, 0.0, 0.100439, 0.011283981203172744),
    (0.9, 0.0, 0.401758, 0.081342877183856815),
    (0.9, 0.0, 0.903955, 0.63873931181571665),
    (0.9, 0.0, 1.406152, 1.2900984647771089),
    (0.9, 0.0, 1.80791, 84262.747244438457),
    (0.9, 0.0, 1.998744, -258065424.18245102),
    (0.9, 0.25, 0.100439, 0.30382045602743469),
    (0.9, 0.25, 0.401758, 0.42777014416242523),
    (0.9, 0.25, 0.903955, 0.91945739347171742),
    (0.9, 0.25, 1.406152, 0.70574581794013305),
    (0.9, 0.25, 1.80791, 39547.857070349821),
    (0.9, 0.25, 1.998744, -113930191.23048962),
    (0.9, 0.5, 0.100439, 0.59276257609647835),
    (0.9, 0.5, 0.401758, 0.70187250896100699),
    (0.9, 0.5, 0.903955, 0.96622845064013913),
    (0.9, 0.5, 1.406152, 0.37401236961439320),
    (0.9, 0.5, 1.80791, 14321.012062035137),
    (0.9, 0.5, 1.998744, -37903634.186695498),
    (0.9, 1.0, 0.100439, 0.98849123709370905),
    (0.9, 1.0, 0.401758, 0.93776245096020485),
    (0.9, 1.0, 0.903955, 0.71776071040376767),
    (0.9, 1.0, 1.406152, 0.095909994592218208),
    (0.9, 1.0, 1.80791, -96.112080726529176),
    (0.9, 1.0, 1.998744, -51025.289172448551),
    (0.9, -0.2, 0.100439, -0.18202222829829691),
    (0.9, -0.2, 0.401758, -0.20137104672252753),
    (0.9, -0.2, 0.903955, 0.18999012908630458),
    (0.9, -0.2, 1.406152, 2.0395004616874891),
    (0.9, -0.2, 1.80791, 28675.434372391951),
    (0.9, -0.2, 1.998744, -24205237.466925399),
    (0.9, -0.4, 0.100439, -0.30117854288377413),
