# Synthetic stand-in with the UEA .ts layout: 9 dimensions, length 144.
@problemName ArticularyWordRecognitionFixture
@timeStamps false
@missing false
@univariate false
@dimensions 9
@equalLength true
@seriesLength 144
@classLabel true 1.0 2.0 3.0
@data
-4.273574,-3.982083,-3.753656,-3.407567,-3.205722,-2.998543,-2.837469,-2.659673,-2.560375,-2.474710,-2.557109,-2.801356,-3.098238,-3.499632,-3.946068,-4.374391,-4.634939,-4.811384,-5.045714,-5.151652,-5.220578,-5.261754,-5.250554,-5.221164,-4.930148,-4.616780,-4.299464,-4.042729,-3.881226,-3.764461,-3.659900,-3.551372,-3.463348,-3.268303,-3.068870,-2.887366,-2.924407,-2.910230,-2.814867,-2.667996,-2.502040,-2.409882,-2.251476,-2.207360,-2.158853,-2.398847,-2.616963,-2.753523,-2.817335,-2.987187,-3.069656,-3.100071,-3.196856,-3.266514,-3.379968,-3.542849,-3.750080,-3.833281,-4.061896,-4.428332,-4.835045,-5.209023,-5.633325,-6.173846,-6.626626,-7.066102,-7.503053,-7.928994,-8.137585,-8.252434,-8.225165,-8.188833,-8.265425,-8.336404,-8.518244,-8.645723,-8.768015,-8.905577,-9.007596,-9.050817,-9.282384,-9.420349,-9.615145,-9.596937,-9.571340,-9.494565,-9.373086,-9.221255,-9.197484,-9.143120,-9.102382,-9.030849,-8.870582,-8.784987,-8.605533,-8.832294,-9.092481,-9.395074,-9.719690,-10.127385,-10.469292,-10.611283,-10.734455,-10.961416,-11.158087,-11.243727,-11.450392,-11.485983,-11.399604,-11.351279,-11.115295,-10.905242,-10.597980,-10.550233,-10.462316,-10.278927,-10.175258,-10.092388,-9.836025,-9.454638,-9.052930,-8.469246,-8.159133,-7.891699,-7.662797,-7.478988,-7.286446,-7.180840,-6.883525,-6.554798,-6.251295,-6.026052,-5.761348,-5.759119,-5.615639,-5.424834,-5.313583,-4.995084,-4.739220,-4.472467,-4.399745,-4.535850,-4.555903,-4.486789:5.513074,5.592692,5.745373,5.926000,6.110644,6.326690,6.558402,6.932930,7.009583,7.143715,7.299416,7.302465,7.208286,6.817752,6.432785,5.998894,5.771322,5.419069,5.175384,5.027156,4.924288,4.933482,4.963835,5.046931,5.199961,5.719693,6.374528,7.172860,7.858845,8.463455,8.979029,9.435365,9.921178,10.220023,10.435344,10.499523,10.379710,10.134073,9.840771,9.311010,8.849049,8.411811,7.987759,7.647802,7.374526,7.079390,6.898278,6.773427,6.669497,6.768636,6.704926,6.941091,7.197198,7.456970,7.544411,7.535856,7.449995,7.540378,7.521367,7.549777,7.774909,7.772903,7.872862,7.789415,7.596099,7.474705,7.457500,7.509812,7.506990,7.508277,7.721622,8.000853,8.358782,8.751075,8.998454,9.309206,9.754265,10.308100,10.993724,11.680202,12.487294,13.204604,13.693653,13.892228,14.086887,14.394130,14.782281,15.249431,15.658625,16.122093,16.492125,16.696430,16.760524,16.951633,17.249329,17.833358,18.314978,18.678380,19.161350,19.698714,20.088616,20.197164,20.404966,20.720775,21.072215,21.179801,21.172826,21.034184,20.829733,20.418166,20.041280,19.477446,18.963143,18.527546,17.996728,17.471473,16.970320,16.690216,16.451905,16.343532,16.294260,16.434774,16.506961,16.696720,16.954352,17.139515,17.187350,17.245736,17.384403,17.300283,17.110728,16.969045,16.869112,16.740946,16.478039,16.082175,15.702173,15.530431,15.358296,15.069289,14.924905,14.673175,14.420499,14.025376:8.404461,9.039604,9.694077,10.329318,11.098359,11.930798,12.567380,13.016210,13.461046,13.900987,14.309270,14.629983,14.761593,14.793056,14.751278,14.619061,14.430076,14.214617,14.067135,13.863641,13.724313,13.529829,13.339804,13.297004,13.460187,13.704118,14.018114,14.311744,14.579473,14.769978,15.053614,15.333231,15.543353,15.941436,16.217156,16.529566,16.619828,16.824532,16.870839,16.943898,16.955996,17.141055,17.336230,17.525758,17.643114,17.609473,17.516306,17.405400,17.436315,17.187603,17.174214,17.133163,17.020651,16.852322,16.584380,16.396681,16.285355,16.143531,16.012438,15.754583,15.500986,15.416998,15.219817,15.160205,15.252313,15.168186,15.152106,15.115789,15.059564,15.058943,15.132704,15.073119,15.016772,14.791086,14.676112,14.499053,14.276733,14.205262,14.025825,13.951896,13.795258,13.658586,13.521415,13.491348,13.606252,13.867236,14.035571,14.215534,14.486522,14.841399,15.370550,15.807452,16.438694,17.013849,17.657823,18.290890,18.848886,19.382041,19.810325,20.106850,20.318965,20.428109,20.485808,20.525267,20.505533,20.606806,20.547284,20.473974,20.439210,20.279929,20.275562,20.233089,20.175181,20.216848,20.201351,20.221818,20.175272,20.063421,19.951222,20.087856,20.130277,20.252407,20.391406,20.595344,20.860682,21.096297,21.284815,21.552999,21.956814,22.275712,22.629581,22.846245,23.019118,23.177628,23.271089,23.452113,23.483841,23.375258,23.343844,23.107616,22.810744,22.416797,21.986769,21.523289:-3.187683,-2.817754,-2.428559,-2.100432,-1.790461,-1.548447,-1.283616,-0.935784,-0.534903,-0.356207,-0.066707,0.131400,0.150143,-0.008261,-0.105841,0.030518,0.115129,0.189030,0.310873,0.388075,0.334039,0.418533,0.376589,0.415519,0.405974,0.506092,0.441201,0.247550,0.128102,0.106862,0.136735,0.068619,0.136753,0.361948,0.517815,0.567162,0.697065,0.788941,0.963933,1.206400,1.402121,1.489916,1.601434,1.743022,1.776266,1.681477,1.555257,1.508649,1.557840,1.779382,2.005228,2.230462,2.450504,2.678508,2.708045,2.802866,3.035426,3.146333,3.291024,3.432999,3.595986,3.672166,3.683047,3.652841,3.710756,3.633387,3.624275,3.640002,3.525036,3.646450,3.759671,3.832714,3.750126,3.514289,3.330850,3.160992,2.896361,2.881138,3.111582,3.287638,3.501191,3.776843,3.880603,3.824597,3.839974,4.008625,4.234931,4.459983,4.550245,4.683989,4.521847,4.276564,4.150053,3.734771,3.446501,3.249343,3.231516,2.996438,2.781508,2.560678,2.466659,2.315054,2.222303,2.273702,2.238029,2.332995,2.481823,2.673779,2.540630,2.537318,2.585383,2.716753,2.985616,3.231223,3.526218,3.738558,3.867455,4.021601,4.190257,4.451601,4.891901,5.236996,5.513787,5.793620,6.030488,6.212604,6.395410,6.826604,7.472678,8.156963,8.906116,9.653198,10.301265,11.021761,11.700769,12.309103,12.940354,13.497686,14.121791,14.507468,14.744739,14.941868,15.067766,15.170797:4.875552,4.995630,5.130852,5.337280,5.481495,5.558304,5.570412,5.527373,5.558905,5.670725,5.630020,5.769775,5.800761,5.794257,5.755886,5.716685,5.778254,6.001710,6.252280,6.563258,6.868532,7.123154,7.297906,7.545746,7.678139,7.764904,7.786903,7.617766,7.359330,7.035375,6.564197,6.105462,5.487097,4.920679,4.350601,3.685741,3.067899,2.448864,1.978826,1.564799,1.309189,1.230245,1.151210,1.026320,1.040499,1.237015,1.546245,1.938311,2.414845,2.882713,3.290883,3.691364,3.851134,3.797287,3.871599,3.954226,4.069725,4.138565,4.259899,4.253367,4.158691,4.070961,3.939627,3.780316,3.863247,3.970581,4.121742,4.204223,4.210546,4.148483,4.134312,4.237368,4.424095,4.587145,4.914539,5.495956,5.809899,6.136421,6.317009,6.660287,6.979459,7.291901,7.504059,7.741975,7.885751,8.138420,8.208971,8.039997,7.978849,7.942261,7.843827,7.928357,8.093780,8.198940,8.221441,8.148060,8.158159,7.992850,7.989268,7.980950,8.088950,8.000446,8.133734,7.949694,7.601528,7.227063,7.062500,6.918596,6.833850,7.069255,7.237802,7.419626,7.614643,7.966984,8.207387,8.407207,8.664448,8.876676,8.896475,8.983972,8.971082,8.668613,8.312137,8.034282,7.707938,7.347288,6.934695,6.639322,6.317343,5.954324,5.675906,5.133250,4.538647,3.996979,3.502236,2.794944,2.017165,1.402061,0.994080,0.450191,-0.090135,-0.471766,-0.854332,-1.085875:4.243417,4.524620,4.663534,4.652119,4.581186,4.659649,4.651685,4.680278,4.746176,4.888343,4.854528,4.846040,4.902105,5.082411,5.387560,5.727293,6.048581,6.176173,6.407916,6.491775,6.592278,6.578279,6.656159,6.674716,6.801444,6.840835,6.764809,6.784310,6.870247,7.055550,7.414752,7.768691,8.224406,8.800386,9.217779,9.598398,9.826005,10.087430,10.200166,10.130041,9.928369,9.823470,9.606844,9.504941,9.365720,9.207136,9.037399,8.892423,8.748266,8.544750,8.495128,8.689833,9.087846,9.418965,9.600845,9.793713,9.867412,9.848390,9.893212,9.958442,9.992330,10.203369,10.543479,10.897336,11.262547,11.520940,11.855892,12.233415,12.608783,13.019372,13.420173,13.742600,14.300010,14.730184,14.854755,14.857699,14.676820,14.388019,14.104549,13.721920,13.249071,12.861085,12.591867,12.451523,12.272918,12.051861,12.028048,12.018542,12.082762,12.209586,12.162841,12.129233,12.185966,12.222656,12.190820,12.017896,11.584624,11.086880,10.475986,10.203410,9.816302,9.468294,9.449649,9.391393,9.332140,9.259079,9.121880,9.127226,9.243807,9.326483,9.506453,9.374671,9.303925,9.285530,9.009655,8.818200,8.549323,8.291918,8.126933,7.983266,7.884728,7.880905,7.940808,7.852653,7.687689,7.507599,7.452124,7.437367,7.502813,7.478570,7.284785,7.097996,6.891994,6.804445,6.799736,6.848357,7.094797,7.243599,7.224412,7.106865,7.204187,7.362722,7.675533,7.977071:2.631873,2.813180,2.849770,2.892905,2.667083,2.398259,2.229104,2.213517,2.031955,1.587912,1.215340,0.967550,0.895044,0.924498,0.964387,1.011617,1.359581,1.834988,2.251251,2.428883,2.746481,3.377980,4.082061,4.785286,5.352935,5.796258,6.333854,6.899513,7.308886,7.634823,7.952198,8.494761,8.950247,9.317053,9.642416,9.938999,10.283084,10.845048,11.370942,11.713910,12.132873,12.361145,12.544592,12.795951,13.005226,13.140908,13.224734,13.369828,13.379567,13.196631,13.011014,12.941498,12.906203,12.990277,13.155753,13.257357,13.250504,13.325173,13.219974,13.008651,12.838760,12.660681,12.650519,12.835932,13.059873,13.322139,13.400171,13.374982,13.644434,13.930208,14.149599,14.412856,14.697252,15.106491,15.427537,15.659108,15.823792,15.969906,16.257269,16.373814,16.347305,16.109874,16.057601,16.110324,16.033679,15.783317,15.448642,15.066580,14.770017,14.498698,14.162220,14.109111,14.112973,14.259458,14.502625,14.615236,14.844808,15.350762,15.956533,16.487184,16.799934,17.010575,17.218908,17.254796,17.264525,17.450340,17.611559,17.756132,17.980373,18.004004,17.940049,17.875206,17.916780,18.043942,18.329514,18.677901,18.986602,19.164132,19.322239,19.615840,19.865362,20.169791,20.488272,20.928122,21.500796,22.081396,22.431403,22.619171,22.712213,22.762343,22.890369,22.877468,22.936463,22.905995,22.850456,22.740882,22.541733,22.180229,21.978910,22.007213,22.032045,22.081745,22.057440,21.955766:-5.148051,-5.014524,-4.852903,-4.720592,-4.634587,-4.526818,-4.519092,-4.706498,-4.790375,-4.904506,-5.139804,-5.335696,-5.423159,-5.466988,-5.535583,-5.498842,-5.301995,-5.120189,-4.885261,-4.625308,-4.441408,-4.153897,-3.686171,-3.364676,-2.970866,-2.597003,-2.033891,-1.679313,-1.292259,-0.895089,-0.546454,-0.192751,0.176337,0.391136,0.346757,0.433025,0.461771,0.521170,0.282912,0.111947,-0.216882,-0.617382,-1.048482,-1.226237,-1.338427,-1.420108,-1.390517,-1.382558,-1.401682,-1.375018,-1.290490,-1.209292,-1.263596,-1.157538,-1.044996,-1.179063,-1.471055,-1.795724,-2.044133,-2.161189,-2.199005,-2.359842,-2.517899,-2.641016,-2.498269,-2.372446,-2.112169,-1.781924,-1.371614,-0.775375,-0.360368,-0.095846,0.162381,0.570779,1.105098,1.594560,1.909950,2.232563,2.505179,2.777375,2.990730,2.993992,3.071346,3.085863,3.120114,3.062785,2.931289,2.940194,2.967952,2.871126,2.826651,2.618942,2.327398,2.063967,1.844902,1.707606,1.599091,1.495662,1.425040,1.316267,1.294995,1.184960,1.022396,0.883781,0.895404,0.897598,0.944972,0.955565,0.789014,0.725734,0.701976,0.671959,0.766397,1.021507,1.283536,1.679423,2.137781,2.642315,3.075645,3.489110,4.052159,4.577359,5.103347,5.576975,5.846082,6.182848,6.398399,6.583144,6.723676,6.868596,6.976479,7.064882,7.150864,7.206383,7.162840,7.146757,7.014568,6.925977,6.841197,6.669897,6.424414,6.068453,5.688717,5.434962:-6.055236,-5.998155,-5.811288,-5.558928,-5.366703,-5.185218,-4.980432,-4.705553,-4.175020,-3.670487,-3.281891,-3.097727,-3.037691,-3.169849,-3.388551,-3.599998,-3.839692,-4.180245,-4.508663,-4.742537,-5.164504,-5.534403,-5.789215,-5.933328,-6.084051,-6.160908,-6.179242,-5.949145,-5.623642,-5.096246,-4.501958,-3.979538,-3.430922,-2.827259,-2.265932,-1.759321,-1.213700,-0.700082,-0.220250,-0.010895,0.264203,0.499237,0.652936,0.788655,1.085170,1.393560,1.758405,2.180440,2.560194,2.934772,3.127592,3.327453,3.442321,3.397072,3.237768,3.061250,2.865911,2.560593,2.256989,1.840152,1.513085,1.349213,1.457118,1.453037,1.416437,1.572842,1.771032,1.937946,2.159382,2.602746,3.118491,3.803259,4.522738,5.134769,5.700574,6.408187,7.151019,7.809101,8.403138,8.848861,9.195318,9.466523,9.759051,9.969732,10.139242,10.346716,10.449954,10.397006,10.243840,9.883708,9.529726,9.452636,9.331836,9.149203,8.737268,8.099794,7.346127,6.711434,5.950955,5.150246,4.396955,3.893463,3.514024,2.971126,2.462481,1.797092,1.176015,0.747144,0.317698,-0.164816,-0.513420,-0.661630,-0.811268,-1.016138,-1.192203,-1.147803,-1.043587,-0.832359,-0.575691,-0.272639,0.004763,0.104176,0.185064,0.277024,0.496775,0.749168,0.744374,0.522896,0.364855,0.316781,0.456308,0.522480,0.712150,1.040449,1.484756,1.823509,2.037377,2.179438,2.523675,2.993138,3.368480,3.679472,3.829553,4.067295:1.0
-0.229339,0.170099,0.606404,1.001468,1.345761,1.703818,2.051677,2.479993,2.815646,2.907754,3.003313,2.997868,2.978837,2.853516,2.712633,2.736396,2.876957,3.004340,3.008816,2.819981,2.815963,2.720509,2.534377,2.398132,2.317550,2.275261,2.277816,2.338428,2.384230,2.428980,2.468787,2.604892,2.655620,2.845302,3.024163,3.213769,3.318416,3.367663,3.413466,3.361172,3.429539,3.509787,3.807844,4.192510,4.461548,4.764387,5.193660,5.775340,6.315367,6.893913,7.449546,7.933104,8.334448,8.693731,8.784819,8.760918,8.864663,8.795447,8.728597,8.679204,8.715692,8.762424,8.823434,8.888046,8.762515,8.488927,8.447247,8.359630,8.427768,8.556406,8.589630,8.339290,8.131226,7.773388,7.421449,7.207171,7.159742,7.251572,7.049801,6.847821,6.484203,6.263591,5.878465,5.696504,5.396473,5.352627,5.161106,4.920842,4.738471,4.552489,4.527442,4.659971,4.842720,4.843664,5.068358,5.193180,5.275461,5.160354,5.233414,5.155907,4.979465,4.822578,4.627865,4.352586,4.109217,3.990395,3.992877,3.916142,3.975576,4.209157,4.576575,5.311235,6.097291,6.761682,7.405289,7.997707,8.358921,8.723796,8.962600,9.316910,9.588832,9.811480,9.880975,9.747474,9.611710,9.473817,9.224953,8.912060,8.775688,8.599896,8.186481,7.869931,7.678838,7.379970,6.987687,6.538388,6.061037,5.513245,4.945678,4.433732,3.979608,3.587191,3.513542,3.339797:5.554303,5.493031,5.399287,5.384720,5.351323,5.500123,5.704354,5.980151,6.239757,6.418352,6.476985,6.348022,6.316523,6.287807,6.318909,6.375854,6.402463,6.537174,6.719749,6.649735,6.501256,6.246423,6.043660,6.014979,5.890682,5.652174,5.328254,5.038149,4.714022,4.256479,3.727170,3.405010,3.176095,3.060971,3.015090,2.812553,2.697884,2.763051,2.958518,3.058727,3.244151,3.522130,3.759405,3.921646,3.927248,4.146601,4.378487,4.539673,4.722269,4.841809,4.961178,5.071607,5.087548,4.961991,4.871006,4.795444,4.988828,4.966158,4.906089,5.052185,5.217455,5.431378,5.673721,6.056221,6.498186,6.798884,7.022202,7.022371,6.777445,6.549486,6.284951,6.075708,5.886155,5.698585,5.450981,4.990503,4.693014,4.643194,4.907642,5.487878,6.138323,6.875778,7.623111,8.172481,8.555737,8.947039,9.356974,9.823898,10.344983,10.972098,11.489387,11.829183,12.260375,12.598317,12.789024,13.045772,13.381721,13.709895,14.020653,14.396028,14.693738,14.895152,15.009452,15.305879,15.490862,15.762464,16.123999,16.425973,16.798147,17.234844,17.563626,17.846436,18.074187,18.196529,18.523942,18.760672,18.898896,19.033064,19.207156,19.353087,19.407694,19.306175,19.298718,19.372919,19.267687,19.340532,19.340704,19.288180,19.428893,19.616807,19.712254,19.840798,19.901278,19.919626,19.915856,19.708878,19.565857,19.264991,18.829472,18.544034,18.274448,17.818774,17.428907,17.027777:4.719109,5.269575,5.890580,6.382838,6.831217,7.219966,7.474357,7.674827,7.913140,8.195208,8.263448,8.284905,8.390233,8.190091,7.777009,7.345756,6.809311,6.341983,6.007904,5.755284,5.481230,5.255345,5.021119,4.773686,4.441621,4.253646,4.136601,4.098975,4.207148,4.285053,4.094446,3.771350,3.408010,3.038478,2.856549,2.820673,2.809831,2.795433,2.750056,2.691608,2.679667,2.775346,3.029340,3.617750,4.228165,4.785238,5.063332,5.284455,5.468136,5.618772,5.721520,5.867974,5.985010,5.972079,5.934904,5.583804,5.253073,4.944635,4.681668,4.419137,4.177187,4.053006,4.006316,3.905447,3.545271,3.221200,2.850468,2.430619,2.137987,1.960686,1.901139,1.820342,1.644774,1.430254,1.174109,0.825940,0.705685,0.693758,0.780645,0.888382,0.879685,0.907083,0.766731,0.480577,0.413150,0.307847,0.327197,0.502425,0.573391,0.391767,0.142181,-0.100096,-0.386148,-0.794014,-1.084889,-1.303593,-1.532033,-1.630469,-1.630614,-1.718214,-1.878270,-1.891139,-1.894303,-1.824893,-1.530362,-1.174755,-1.004272,-0.846712,-0.644364,-0.611937,-0.813858,-0.969727,-0.904627,-0.769894,-0.507134,-0.221805,-0.213804,-0.346576,-0.323088,-0.263460,-0.241275,-0.285719,-0.258433,-0.110285,0.065767,0.232766,0.217558,0.010997,-0.083006,-0.091475,-0.027445,-0.039410,-0.231762,-0.248401,-0.294871,-0.368722,-0.713519,-1.173497,-1.570066,-1.847653,-2.084133,-2.335310,-2.630092,-2.758772:0.280764,0.414341,0.707735,0.975044,1.109198,1.170908,1.310772,1.637764,1.966964,2.314803,2.647308,3.064982,3.309850,3.599388,3.718074,3.930712,4.241270,4.660553,4.945905,5.208111,5.525237,5.777501,5.905503,6.015307,6.337502,6.763956,7.184134,7.510839,7.750142,7.936136,8.060752,7.991129,7.881020,7.770232,7.829678,7.789620,7.861066,7.928085,7.912654,7.780906,7.728174,7.731979,7.729195,7.840411,8.036440,8.157984,8.387935,8.639603,8.791567,8.972946,9.361189,9.964680,10.557482,11.203161,11.877762,12.607757,13.233358,13.847351,14.318147,14.728338,15.172431,15.482352,15.758848,16.040881,16.256646,16.311990,16.595516,16.790325,16.950035,17.164087,17.332850,17.600497,17.786605,17.936373,17.989085,17.933270,17.859953,17.974448,17.971586,17.963798,18.034134,18.162995,18.409845,18.681495,19.015718,19.475976,19.859364,20.271599,20.822572,21.199981,21.458740,21.701535,21.923537,22.046346,21.968942,21.853967,21.683549,21.346451,21.108582,20.814779,20.332710,19.857439,19.422620,18.939155,18.419022,18.052563,17.832090,17.642915,17.353551,17.130733,16.894088,16.659866,16.390343,16.155917,15.901074,15.718645,15.651432,15.491343,15.286482,15.069385,15.019190,14.954261,15.044271,15.182102,15.559739,16.056777,16.556304,17.019437,17.332687,17.620090,17.885329,18.214613,18.487812,18.868123,19.095141,19.245569,19.424126,19.310098,19.335715,19.359147,19.554057,19.677703,19.843586,19.997186:7.834993,7.680602,7.709893,7.615941,7.546862,7.413003,7.289025,7.169335,6.967884,6.752605,6.505345,6.131799,5.855706,5.601636,5.203795,4.919422,4.631426,4.546545,4.552373,4.497311,4.364232,4.236745,4.183314,4.124831,3.940868,3.663518,3.538100,3.594846,3.624438,3.389737,3.235511,3.178430,3.156637,3.115362,3.013373,3.165629,3.400107,3.638397,3.763930,3.841287,4.016762,4.328073,4.579658,4.672290,4.804883,4.805116,4.828867,4.585201,4.396761,4.302879,4.218858,4.012955,3.788556,3.455991,3.053392,2.550059,1.859688,1.474228,1.022055,0.608567,0.156277,-0.324800,-0.861939,-1.451343,-2.258462,-2.969217,-3.492579,-3.872286,-4.028551,-4.236363,-4.406546,-4.513695,-4.526888,-4.511498,-4.345400,-3.828537,-3.169901,-2.501182,-1.920355,-1.252654,-0.720162,-0.139521,0.354195,0.817696,1.216871,1.500873,1.804832,1.942178,2.272320,2.592952,2.856610,2.958312,3.091721,3.201327,3.406259,3.625202,3.890306,4.320455,4.703135,5.180846,5.384794,5.554059,5.706672,5.978827,6.243990,6.375979,6.323192,6.063886,5.753923,5.177294,4.374817,3.485800,2.718052,2.009186,1.291371,0.504553,-0.247868,-0.924288,-1.542676,-2.011901,-2.554470,-2.996126,-3.261926,-3.517315,-3.793192,-4.084402,-4.266772,-4.443798,-4.682531,-4.813757,-4.874560,-4.929686,-4.968620,-4.904750,-4.952952,-4.934264,-4.827087,-4.686648,-4.758218,-4.665490,-4.543482,-4.424412,-4.261853,-3.992195:-3.692574,-3.807594,-3.884533,-3.869105,-3.652292,-3.522427,-3.417210,-3.537806,-3.452815,-3.180795,-2.980907,-2.660728,-2.395483,-2.083566,-1.648749,-1.230100,-0.948776,-0.600969,-0.325338,0.142336,0.376399,0.529230,0.773024,1.074162,1.323534,1.485249,1.456513,1.506941,1.660310,1.719519,1.596842,1.326423,1.081762,0.778113,0.492443,0.108217,-0.250210,-0.590111,-0.955247,-1.444318,-1.946987,-2.466933,-2.872365,-3.283476,-3.557502,-3.679711,-3.881464,-3.998234,-4.009754,-4.016313,-3.940368,-3.914120,-3.809405,-3.483342,-3.024892,-2.435947,-2.081489,-1.735085,-1.291768,-0.940283,-0.520260,-0.051328,0.417551,0.926696,1.369648,1.781538,2.014583,2.198020,2.431904,2.478286,2.398601,2.381251,2.146050,1.911405,1.644474,1.511118,1.229774,0.731887,0.343029,-0.094683,-0.424389,-0.716677,-1.086112,-1.413171,-1.676800,-2.193780,-2.653743,-3.137045,-3.409276,-3.723230,-4.010452,-4.375044,-4.836582,-5.275275,-5.612008,-5.880828,-6.136548,-6.141253,-6.128938,-6.034253,-6.045472,-6.083935,-6.348210,-6.668131,-6.868769,-6.992232,-7.101439,-7.382571,-7.770146,-8.249724,-8.748855,-9.522415,-10.282156,-11.102061,-11.787941,-12.181229,-12.724972,-13.283159,-13.700358,-14.003883,-13.957093,-13.903842,-13.685666,-13.253410,-12.822029,-12.166337,-11.550136,-11.002689,-10.464909,-9.933744,-9.424516,-8.913922,-8.518475,-8.141675,-7.803063,-7.526370,-7.465379,-7.557563,-7.512804,-7.461437,-7.370235,-7.288553,-7.323419,-7.300317:4.487743,4.565618,4.674714,4.786826,4.709767,4.457143,4.227624,4.028401,3.861587,3.773635,3.818188,3.820534,3.695800,3.625975,3.513139,3.402411,3.286866,3.119950,2.816434,2.489872,1.979925,1.362417,0.628923,-0.044516,-0.698514,-1.354976,-1.993878,-2.598373,-3.112893,-3.429509,-3.572606,-3.686077,-3.736647,-3.772471,-3.731971,-3.870311,-3.922415,-3.769454,-3.618773,-3.571004,-3.516988,-3.500440,-3.559175,-3.647634,-3.622451,-3.619958,-3.558445,-3.350812,-3.140809,-3.119031,-3.069122,-2.948712,-2.700744,-2.436204,-2.138335,-1.633452,-1.183642,-0.851160,-0.537709,-0.403842,-0.192515,-0.115247,0.115767,0.163422,0.120714,0.021841,-0.219326,-0.730869,-1.221730,-1.648614,-2.101106,-2.493469,-2.952738,-3.501963,-4.133731,-4.712416,-5.235097,-5.724956,-6.043765,-6.201348,-6.400610,-6.524557,-6.681253,-6.823415,-7.189401,-7.416169,-7.760520,-8.175889,-8.728017,-9.215406,-9.769993,-10.573978,-11.321074,-11.982839,-12.581960,-13.122495,-13.390251,-13.541545,-13.775335,-13.733102,-13.589789,-13.474792,-13.360015,-13.052728,-12.801222,-12.620155,-12.414666,-12.303951,-12.431046,-12.713624,-12.907251,-13.275841,-13.613188,-14.009290,-14.273172,-14.493967,-14.588168,-14.831351,-15.120516,-15.399047,-15.561529,-15.626310,-15.606559,-15.628620,-15.482864,-15.319222,-15.123353,-14.968244,-14.774789,-14.446195,-14.145640,-13.814865,-13.287559,-12.864869,-12.493134,-12.107893,-11.840493,-11.571900,-11.333499,-11.006948,-10.745844,-10.452081,-10.061482,-9.624465:1.955256,1.648601,1.412396,1.128592,0.844189,0.333822,-0.085273,-0.633961,-1.242417,-1.793554,-2.309137,-3.085103,-3.968551,-4.759374,-5.599369,-6.261862,-6.866223,-7.425295,-8.002348,-8.287957,-8.608011,-8.737856,-8.943428,-8.811687,-8.459226,-8.037555,-7.579072,-7.335964,-7.238538,-7.110327,-6.849781,-6.794663,-6.779560,-6.889184,-7.003392,-7.202990,-7.648870,-8.180786,-8.802014,-9.299134,-9.842635,-10.438713,-11.055027,-11.680191,-12.071135,-12.383433,-12.646246,-12.809230,-12.837948,-13.011095,-13.103631,-13.223708,-13.205186,-13.272289,-13.388097,-13.584081,-13.961268,-14.333408,-14.647563,-14.997123,-15.209092,-15.411102,-15.504826,-15.633304,-15.624157,-15.537432,-15.458433,-15.264686,-14.989105,-14.782596,-14.457774,-14.168788,-13.861606,-13.468876,-13.264369,-13.181370,-13.181832,-13.026980,-12.801093,-12.754825,-12.819776,-12.916763,-12.980251,-12.946894,-13.044521,-12.916095,-12.580807,-12.153688,-11.834279,-11.555567,-11.509818,-11.448014,-11.450116,-11.481616,-11.743391,-12.124343,-12.493434,-13.004258,-13.695273,-14.410385,-15.086008,-15.810460,-16.211034,-16.455077,-16.642511,-16.768714,-16.807199,-16.721648,-16.753606,-16.752966,-16.682051,-16.559111,-16.400688,-16.280274,-16.394141,-16.629874,-16.737806,-16.967235,-17.267779,-17.601878,-17.886306,-18.243122,-18.588289,-18.870473,-19.124447,-19.360351,-19.439810,-19.439859,-19.591225,-19.738385,-19.815307,-19.881308,-19.909771,-19.873362,-19.915857,-20.090522,-20.336567,-20.468360,-20.665442,-20.832505,-20.990096,-21.124429,-21.117291,-21.027928:7.713671,8.153246,8.654955,9.237002,9.794114,10.094801,10.463503,10.803285,11.094005,11.385769,11.614473,11.767074,11.966443,12.251012,12.450586,12.369442,12.464429,12.749902,12.831001,12.572328,12.281892,11.865782,11.453575,11.121029,10.541267,9.881343,9.442329,9.149014,8.706988,8.267983,8.017508,8.128270,8.062975,8.102499,8.022792,7.855608,7.705398,7.663385,7.311207,6.773932,6.355848,6.002329,5.415706,4.700624,4.114979,3.834017,3.755676,3.739855,3.842160,3.696575,3.826955,4.101486,4.228243,4.311640,4.404487,4.634342,5.039521,5.183320,5.386159,5.333499,5.274923,5.385282,5.297133,5.199898,5.109217,4.843755,4.837482,4.923614,4.798386,4.910982,4.958639,5.020578,5.074630,4.901660,4.711325,4.466571,4.332500,4.443136,4.537724,4.537676,4.535823,4.441682,4.280405,4.186795,4.080325,4.280202,4.617026,4.999092,5.257392,5.416604,5.252552,4.913261,4.737092,4.384026,4.001149,3.730790,3.563961,3.314442,2.864435,2.430331,1.987409,1.517331,1.250929,1.132978,0.841365,0.544200,0.344147,0.132165,-0.242128,-0.709589,-1.046144,-1.342802,-1.545404,-1.682900,-1.763980,-1.951479,-2.041448,-2.174935,-2.508380,-2.774036,-3.102660,-3.209656,-3.289832,-3.383327,-3.358443,-3.198358,-3.089139,-2.795633,-2.501907,-2.088796,-1.503004,-0.970553,-0.366270,0.058102,0.432358,0.786263,0.904482,0.810143,0.718636,0.469216,0.305532,-0.005342,-0.459324,-1.139448:2.0
8.258547,7.681995,7.133728,6.635901,6.258867,6.040707,6.042556,5.958953,6.077738,6.001325,5.936482,5.816959,5.741068,5.723928,5.733569,5.745659,5.811962,5.999880,6.032909,6.069701,5.990938,6.107081,6.174942,6.394694,6.609063,6.829461,6.757978,6.712745,6.599102,6.342340,6.069777,5.916350,5.758157,5.502922,5.295989,5.050645,4.732812,4.297897,4.083806,3.891216,3.519011,3.131516,2.842775,2.357594,1.859644,1.206853,0.671977,0.242350,-0.163770,-0.385831,-0.720473,-1.079957,-1.212492,-1.160156,-1.161917,-1.014104,-0.725531,-0.283194,0.081544,0.459171,0.864469,1.193746,1.615858,1.931338,2.086008,2.114830,2.125455,2.091345,1.980685,1.835337,1.781711,1.553424,1.321971,1.073124,1.025026,1.177220,1.326668,1.527962,1.871100,2.275752,2.682480,3.227611,3.659878,4.127682,4.498680,4.851884,5.073252,5.191314,5.472451,5.649480,5.603807,5.454486,5.281601,4.920902,4.588572,4.280289,4.065147,3.825860,3.493637,3.192827,2.806046,2.507092,2.278138,2.292473,2.372068,2.501752,2.609700,2.790890,3.040739,3.379140,3.746866,4.146624,4.597768,4.779322,4.906446,4.959329,4.917105,5.000569,4.994028,5.080270,4.983362,4.899966,4.660414,4.451036,4.221573,4.178398,4.214795,4.146473,4.019919,3.725011,3.573641,3.232073,3.051731,2.857191,2.807630,2.530653,2.334398,2.205936,2.033896,1.893313,1.766860,1.808684,1.802028,1.837425:-12.719098,-12.769760,-12.746398,-12.743284,-12.694811,-12.524130,-12.468003,-12.352412,-12.345002,-12.218240,-12.113301,-12.125681,-12.190717,-12.205866,-12.207174,-12.186255,-12.226904,-12.294388,-12.389677,-12.767151,-12.996617,-13.538476,-14.109427,-14.710164,-15.101026,-15.383932,-15.663764,-15.852710,-15.856112,-15.923940,-15.868861,-15.592149,-15.370357,-14.940394,-14.571198,-14.080000,-13.694207,-13.438351,-13.301001,-13.299868,-13.416580,-13.435360,-13.507604,-13.503858,-13.469059,-13.425663,-13.244310,-13.074079,-12.879922,-12.602235,-12.208450,-11.964097,-11.733432,-11.480525,-11.282284,-11.307755,-11.434721,-11.614330,-11.862024,-12.025930,-12.206476,-12.399556,-12.648092,-12.716838,-12.857547,-13.161334,-13.497558,-13.764723,-13.950299,-13.987035,-14.121568,-14.473500,-14.782910,-15.275678,-15.743922,-16.246176,-16.562407,-16.830092,-16.866473,-16.832003,-16.799252,-16.907301,-17.009045,-16.950141,-16.834017,-16.480340,-16.163264,-15.769111,-15.470363,-15.151835,-14.972102,-14.824516,-14.744862,-14.696286,-14.624176,-14.750342,-15.089791,-15.695230,-16.315599,-17.074470,-17.766848,-18.395545,-18.998642,-19.478076,-19.896739,-20.310357,-20.691270,-20.939612,-21.047008,-20.899476,-20.662889,-20.338173,-20.079177,-19.893224,-19.624399,-19.365639,-19.200339,-18.888360,-18.524249,-18.123709,-17.797124,-17.427332,-17.342315,-17.205494,-17.101507,-17.051364,-17.122819,-17.289237,-17.423806,-17.560789,-17.878343,-18.178465,-18.369079,-18.455379,-18.280850,-18.242072,-18.288169,-18.475790,-18.722126,-19.021107,-19.338312,-19.848805,-20.142249,-20.536500:6.285153,6.377252,6.313796,6.184820,5.980318,5.777637,5.642369,5.561926,5.638008,5.813643,6.018307,6.248694,6.505657,6.794348,7.069628,7.327891,7.544343,7.736388,7.841684,7.770466,7.821894,7.788475,7.911199,7.964370,7.818184,7.640107,7.498477,7.276520,7.007790,6.684048,6.351502,5.897115,5.271899,4.759141,4.261518,3.824256,3.617379,3.478272,3.413613,3.476715,3.543390,3.478726,3.397087,3.604581,3.801237,3.926862,3.915754,4.001507,4.041999,4.092058,4.221735,4.417738,4.812086,5.205441,5.593819,5.744014,5.897470,6.060650,6.291302,6.460464,6.564049,6.553057,6.409377,6.136802,5.720580,5.390443,4.931580,4.562494,4.168369,3.910043,3.577923,3.239826,2.871685,2.583704,2.250847,2.105975,2.063694,1.969746,2.165729,2.477968,2.922129,3.363413,3.970244,4.692507,5.324819,6.057953,6.819210,7.407150,7.851112,8.314667,8.630299,8.745190,8.894978,9.024396,9.058388,8.896749,8.893320,8.742778,8.676672,8.632096,8.465117,8.246969,7.912150,7.814673,7.612104,7.358547,7.040763,6.769916,6.695118,6.777144,6.865384,6.896099,7.243509,7.736086,8.416375,9.061093,9.720707,10.230537,10.514554,10.792483,10.859005,10.760145,10.786491,10.896432,11.014811,11.140382,11.161314,10.932823,10.532163,10.291168,10.144568,10.168214,10.162618,10.115010,9.912263,9.651589,9.341944,8.849058,8.498255,8.232480,8.041617,7.729942,7.494000,7.183490:3.827916,3.820058,3.870874,3.946591,3.881195,4.013799,4.169139,4.445916,4.590865,4.712704,4.876009,5.019838,5.114282,5.075971,4.982118,4.850819,4.812548,4.676111,4.606696,4.556796,4.619407,4.857975,5.045076,5.187403,5.263817,5.367874,5.566674,5.828744,6.069387,6.234415,6.373049,6.586385,6.874520,7.025986,7.055229,6.964735,6.789676,6.654336,6.519420,6.284246,6.028152,5.820502,5.588270,5.150804,4.589515,3.924809,3.240140,2.730396,2.323225,1.796918,1.110440,0.411422,-0.269019,-0.966795,-1.773482,-2.465791,-3.243661,-3.945321,-4.560571,-5.232171,-5.853977,-6.407900,-6.783177,-7.030478,-7.098181,-7.173801,-7.126001,-7.087200,-6.884658,-6.593461,-6.288579,-5.827579,-5.471527,-4.935121,-4.472954,-4.155271,-3.929559,-3.766121,-3.392380,-3.008568,-2.605467,-2.406428,-2.303194,-2.258623,-2.276541,-2.419070,-2.562864,-2.710422,-3.029233,-3.239183,-3.610348,-4.107227,-4.762346,-5.305703,-5.627465,-5.998560,-6.249410,-6.570253,-6.834028,-7.201182,-7.475709,-7.719440,-7.939592,-7.976129,-7.910036,-7.913585,-8.068441,-8.270977,-8.501348,-8.718109,-8.933755,-8.965422,-8.990671,-8.941360,-8.987607,-9.081792,-9.188215,-8.986172,-8.837911,-8.848693,-8.944762,-8.958904,-9.046587,-9.092847,-9.313240,-9.928912,-10.548725,-11.178133,-11.789645,-12.479345,-13.089458,-13.257635,-13.397012,-13.575355,-13.733048,-13.848745,-13.666332,-13.394241,-13.076347,-12.815627,-12.440052,-12.147808,-11.854965,-11.876114:-1.552481,-1.093408,-0.797692,-0.522752,-0.274892,-0.107607,-0.058165,-0.022540,-0.079774,-0.436936,-0.715434,-1.038901,-1.189259,-1.547108,-1.879660,-2.376910,-2.870698,-3.367380,-3.932889,-4.476062,-5.073939,-5.537219,-6.141065,-6.695149,-7.220167,-7.721397,-8.221661,-8.565202,-8.933140,-9.272086,-9.618386,-10.078397,-10.577716,-10.978436,-11.312240,-11.686401,-12.153423,-12.759571,-13.341875,-13.978485,-14.400201,-14.812440,-15.115355,-15.321314,-15.467035,-15.624659,-15.812349,-15.899387,-16.126224,-16.233434,-16.302591,-16.234017,-16.305702,-16.327425,-16.382278,-16.362252,-16.350541,-16.458040,-16.651258,-16.860689,-16.969988,-17.201393,-17.390983,-17.589050,-17.804089,-18.060502,-18.135495,-18.299564,-18.288198,-18.209215,-17.911267,-17.772776,-17.679287,-17.403155,-17.090217,-16.881627,-16.730302,-16.574177,-16.449945,-16.228412,-16.273559,-16.460409,-16.760588,-16.897080,-16.986843,-17.171242,-17.473746,-17.662511,-17.766597,-17.829827,-17.940536,-18.177633,-18.361808,-18.437369,-18.392864,-18.340168,-18.236184,-18.051159,-17.858866,-17.591903,-17.212765,-16.952166,-16.716322,-16.516207,-16.251518,-15.921769,-15.605077,-15.382544,-15.160824,-15.005777,-14.847243,-14.785848,-14.883363,-14.884866,-14.912364,-14.904925,-14.872950,-14.973469,-15.328691,-15.615232,-15.972534,-16.226082,-16.471162,-16.833545,-17.191511,-17.485705,-17.827337,-18.183300,-18.689954,-19.226348,-19.567313,-19.940076,-20.289706,-20.623014,-20.993954,-21.435078,-21.903867,-22.337508,-22.704839,-22.913445,-22.981478,-22.889670,-22.851865,-22.891161:4.085715,4.374015,4.490189,4.677802,4.863212,5.099795,5.578066,6.141359,6.786390,7.408453,7.727995,7.942591,8.092184,8.250959,8.348053,8.407921,8.455600,8.448505,8.067533,7.844667,7.744578,7.690021,7.836219,8.125270,8.322218,8.496504,8.819604,9.161126,9.465284,9.871826,10.292532,10.657316,10.929935,11.250776,11.428068,11.560367,11.627152,11.675380,11.683013,11.647856,11.613072,11.416667,11.228985,10.817658,10.488212,10.112775,9.741843,9.339374,8.993813,8.495689,8.153750,7.695900,7.242883,6.868310,6.642718,6.723598,6.812421,6.774020,6.867773,6.827405,6.719604,6.782106,6.891124,7.186852,7.712855,8.305166,8.841809,9.321818,9.742304,10.282132,10.720359,11.421188,12.310266,13.314125,14.044663,14.527455,14.909503,15.116136,15.214831,15.279806,15.302325,15.304888,15.391026,15.327415,15.109787,14.712777,14.368015,14.249524,13.987247,13.738462,13.522313,13.278412,13.169311,12.933869,12.641304,12.365097,12.247487,12.270080,12.327872,12.262159,12.155297,12.026035,11.890047,11.709824,11.541254,11.506818,11.537660,11.613090,11.629982,11.482234,11.299921,11.155136,11.024617,10.950250,10.813006,10.824785,10.742324,10.708007,10.660617,10.521963,10.361328,10.248785,10.205155,10.121163,10.137489,10.208504,10.263645,10.238706,10.191821,10.169701,10.152986,10.268552,10.368681,10.355602,10.358427,10.425231,10.389282,10.354403,10.421767,10.517065,10.719010,10.914781,11.120104,11.250197:6.240195,6.411451,6.520046,6.653616,6.871529,6.930646,6.914654,6.883942,6.982633,7.022150,7.144307,7.353390,7.712957,8.130576,8.619453,9.080800,9.428695,9.852520,10.376147,10.881687,11.145168,11.392334,11.564120,11.742636,11.807691,11.860690,12.013988,12.181815,12.511027,12.938231,13.277077,13.728939,14.173069,14.669639,14.977194,15.224804,15.581161,16.031907,16.257191,16.468282,16.532356,16.452406,16.349709,16.194801,16.135971,15.977983,15.918941,15.881770,15.709021,15.562859,15.383154,15.165157,14.977156,14.907783,14.836873,14.629805,14.462841,14.362789,14.090119,13.673488,13.339400,13.084358,12.887699,12.730892,12.486227,12.021489,11.482397,11.110640,10.768413,10.425231,10.224592,10.170583,10.079174,9.661951,9.410124,9.000959,8.594609,8.370938,8.305237,8.060342,7.831049,7.660328,7.589325,7.514464,7.512793,7.774168,7.857233,8.049994,8.236530,8.394462,8.389550,8.682461,8.846266,8.958999,9.043056,9.092092,9.027002,8.915544,8.830865,8.918836,9.114717,9.507554,9.944880,10.160703,10.478184,10.816535,11.112096,11.410638,11.712509,11.943072,12.298765,12.617415,12.879099,13.046841,13.249789,13.389430,13.372854,13.479669,13.564348,13.764202,13.933855,14.096560,14.146158,13.879137,13.563045,13.241360,12.949571,12.791655,12.779098,12.619444,12.427537,12.003270,11.674897,11.554343,11.474646,11.621110,11.762041,11.801620,11.915647,11.891504,11.814682,11.927197,12.066894,12.343367:-5.001847,-5.338053,-5.652043,-5.927968,-6.030026,-6.241250,-6.521182,-6.722271,-6.923909,-6.960041,-7.039369,-7.070964,-6.954928,-6.922447,-6.972554,-7.032192,-7.165249,-7.225543,-7.238450,-7.245460,-7.214698,-7.358415,-7.366549,-7.356169,-7.419394,-7.432875,-7.293916,-7.047303,-6.811828,-6.583235,-6.461604,-6.547478,-6.812574,-6.963574,-7.148441,-7.421871,-7.620404,-7.762266,-7.970202,-8.294735,-8.595113,-8.956841,-9.260817,-9.528447,-9.872442,-10.100323,-10.148203,-10.097669,-10.210818,-10.365941,-10.711104,-11.120821,-11.589466,-12.044913,-12.548218,-13.098871,-13.360318,-13.675963,-14.124517,-14.450887,-14.615547,-14.692297,-14.559004,-14.379694,-14.161463,-13.851433,-13.289734,-12.604423,-12.155753,-11.785963,-11.262920,-10.883048,-10.571971,-10.358989,-10.277441,-10.288638,-10.480864,-10.748285,-11.302863,-11.858055,-12.370211,-12.890502,-13.542945,-14.250570,-14.822343,-15.407180,-16.031355,-16.522023,-16.883445,-17.172037,-17.341886,-17.529143,-17.477516,-17.537640,-17.587575,-17.642537,-17.928068,-18.377178,-18.671346,-18.962794,-19.169959,-19.408489,-19.697402,-20.036220,-20.418817,-20.678961,-21.151549,-21.551951,-21.946671,-22.166558,-22.456289,-22.782064,-23.162586,-23.527581,-23.888750,-24.263400,-24.733794,-25.156771,-25.478097,-25.806329,-25.965911,-26.073204,-26.327836,-26.542801,-26.711005,-26.841277,-26.873849,-26.835727,-26.881710,-27.040916,-27.165695,-27.268721,-27.390914,-27.612184,-27.716625,-27.889021,-28.162885,-28.496570,-29.060954,-29.712832,-30.209605,-30.633948,-30.878868,-31.207991:5.865426,6.301446,6.755022,6.986683,7.425035,7.909462,8.301820,8.558940,8.826820,9.068293,9.249353,9.486489,9.548508,9.581973,9.459799,9.471149,9.350697,9.254753,9.330911,9.648913,10.048369,10.398283,10.912321,11.242613,11.533590,11.727671,12.046562,12.268681,12.426674,12.561936,12.731337,12.712406,12.583198,12.412839,12.076445,12.018534,12.098586,12.228461,12.336111,12.540263,12.872411,13.100053,13.253437,13.333759,13.398310,13.385039,13.369317,13.252268,13.093172,12.981228,12.846342,12.618943,12.395115,12.276840,12.095003,11.918151,11.542324,11.310379,11.151433,11.086419,10.989385,10.708783,10.299283,10.022917,9.610465,9.099756,8.716530,8.371119,8.147831,7.712826,7.192579,6.446427,5.771260,5.217567,4.722321,4.169663,3.667532,3.197059,2.590575,1.932895,1.346143,0.928075,0.577558,0.391544,0.347248,0.439686,0.586669,0.676287,0.716917,0.879171,1.137956,1.474997,1.809984,2.189285,2.638123,3.136462,3.477460,3.681827,3.976145,4.265761,4.558690,4.690806,4.858806,5.259821,5.731581,6.244903,6.624671,6.950902,7.396370,7.898915,8.323437,8.837062,9.424804,10.308685,11.135903,11.759798,12.248257,12.610396,12.961074,13.164493,13.124426,13.104762,13.083955,12.991009,12.964140,12.803063,12.589982,12.465143,12.422461,12.487005,12.677957,13.134909,13.660305,14.146350,14.768165,15.436006,16.107654,16.818031,17.512931,18.190557,18.831143,19.460489,20.079910,20.663724:3.0
0.256635,-0.036138,-0.171546,-0.399408,-0.562719,-0.516227,-0.368932,-0.187854,0.043988,0.163160,0.202921,0.215500,0.429661,0.537099,0.725047,0.922686,1.191739,1.433441,1.549840,1.706492,2.025404,2.360677,2.656464,2.838165,2.775499,2.738851,2.691324,2.731017,2.825313,2.927214,3.145360,3.277446,3.315460,3.447162,3.677601,4.064535,4.625455,5.191954,5.732120,6.256308,6.697584,7.139858,7.395964,7.684055,7.978595,8.185146,8.313875,8.282395,8.161205,7.938578,7.516640,7.007596,6.515688,5.991122,5.793993,5.577016,5.464838,5.434918,5.535125,5.744968,5.909062,6.206246,6.729351,7.281736,7.914457,8.680096,9.211028,9.705887,10.151283,10.469614,10.832917,11.214784,11.615195,11.989357,12.179674,12.265267,12.287862,12.284541,12.318732,12.359509,12.356695,12.541472,12.556607,12.626041,12.641711,12.735562,13.021988,13.330614,13.729368,14.030773,14.420455,14.817732,15.303265,15.711677,16.137439,16.422463,16.679464,16.821265,16.805787,16.836641,16.772242,16.867628,16.872319,16.929140,16.794741,16.734996,16.648164,16.574219,16.697397,16.880761,17.088709,17.224396,17.347136,17.222045,17.214103,17.098301,17.126129,16.955433,16.768221,16.710792,16.397145,15.907261,15.496710,15.069350,14.672806,14.357854,13.866026,13.323685,12.645074,12.090563,11.753683,11.476883,11.307384,11.299380,11.201659,11.268169,11.311881,11.364233,11.315688,11.486065,11.792407,12.028701,12.021665,11.857525:-0.667905,-0.805763,-0.883926,-0.725693,-0.808506,-0.763551,-0.684728,-0.705416,-0.686636,-0.834948,-0.725798,-0.665123,-0.548533,-0.446446,-0.350814,-0.300854,-0.081789,0.048030,0.103660,0.306665,0.522475,0.956380,1.244240,1.572785,1.878891,2.035610,2.198458,2.320062,2.417037,2.477832,2.517053,2.383078,2.055222,1.649782,1.383542,1.079683,0.758034,0.587861,0.346335,0.052164,-0.433632,-0.761989,-1.093549,-1.219884,-1.150791,-1.031113,-0.890457,-0.805722,-0.692262,-0.582119,-0.350907,0.080621,0.645438,1.122031,1.642903,2.222653,2.795637,3.467945,4.095304,4.675852,5.136338,5.498123,5.735258,5.875751,6.097985,6.423187,6.812848,7.175272,7.447410,7.598002,7.875730,8.264498,8.671350,9.217730,9.793751,10.314267,10.741572,10.890756,11.008287,11.121023,11.311219,11.495544,11.682601,11.786094,11.867733,11.773455,11.829608,11.856956,11.946479,12.208998,12.566941,12.671107,12.574856,12.387368,12.082014,11.847453,11.626507,11.457974,11.196006,10.984998,10.749812,10.563125,10.299908,10.309512,10.500031,10.906359,11.372947,11.680147,12.064331,12.566066,13.163511,13.805691,14.510975,15.138325,15.858943,16.445756,16.907263,17.240204,17.453795,17.895565,18.358336,18.621844,18.796824,18.898887,19.061341,19.382715,19.737870,20.070806,20.585034,21.051600,21.557452,22.073176,22.624852,23.272204,23.875965,24.300561,24.671092,24.835023,24.886790,25.005014,25.171398,25.314573,25.384892,25.304750:2.951885,3.322785,3.621644,3.988662,4.474902,4.751554,4.960413,4.853459,4.673867,4.590545,4.513686,4.373460,4.002340,3.680381,3.413135,3.231076,2.805941,2.469439,2.313112,2.414384,2.475851,2.483539,2.307797,1.975547,1.850340,1.756843,1.638019,1.589177,1.633445,1.675880,1.515928,1.383328,1.420616,1.586602,1.652127,1.755500,1.766311,1.942554,2.167218,2.131593,2.011835,1.848198,1.826159,1.729066,1.516428,1.160562,0.928619,0.658138,0.408181,0.055769,-0.152755,-0.201395,-0.159958,-0.055659,-0.084114,-0.152026,-0.342576,-0.562747,-0.597132,-0.441029,-0.283615,-0.092857,-0.116586,-0.324160,-0.538569,-0.632623,-0.673725,-0.648312,-0.584210,-0.355305,-0.191840,-0.096335,-0.211219,-0.459645,-0.766944,-1.179810,-1.706968,-2.365194,-2.943424,-3.494668,-3.916793,-4.433618,-5.063826,-5.615133,-6.103093,-6.493920,-6.687061,-6.692609,-6.579786,-6.364381,-6.353495,-6.317106,-6.232637,-6.073075,-5.839399,-5.807871,-5.538295,-5.302702,-5.222678,-5.058083,-4.988775,-4.889656,-4.651096,-4.557525,-4.546661,-4.750095,-4.979249,-5.093297,-5.301654,-5.567565,-5.857203,-6.184353,-6.516423,-7.102132,-7.691396,-8.191190,-8.800253,-9.238850,-9.619344,-9.903608,-10.214640,-10.431438,-10.540198,-10.745752,-10.955860,-11.070803,-11.273831,-11.478733,-11.627082,-11.639070,-11.585004,-11.638554,-11.649517,-11.603878,-11.594538,-11.433530,-11.075315,-10.707605,-10.312797,-9.925685,-9.594660,-9.343640,-9.115034,-8.905398:-0.640116,-0.808928,-0.893597,-1.059589,-1.118154,-1.143345,-0.944046,-0.790366,-0.585195,-0.253681,-0.217119,0.007489,0.177595,0.498406,0.634585,0.961990,1.303703,1.587879,1.690286,1.690516,1.789402,1.839044,2.038732,2.244929,2.587460,2.953644,3.342119,3.660085,3.819617,4.145977,4.327271,4.526806,4.415335,4.162839,3.764869,3.215079,2.586134,1.857795,1.174125,0.402774,-0.126206,-0.777306,-1.297887,-1.583036,-1.832144,-1.881159,-1.816305,-1.654321,-1.351466,-1.180524,-0.748741,-0.153205,0.299914,0.824364,1.339330,1.740431,2.303280,2.807253,3.315040,3.912949,4.361759,4.900761,5.101430,5.164535,5.319270,5.400961,5.391452,5.282987,5.026527,4.700384,4.309320,3.763418,3.308488,2.836231,2.422597,1.863975,1.366258,0.909055,0.523677,0.202828,0.004221,-0.157184,-0.279160,-0.308397,-0.337320,-0.500298,-0.441581,-0.211076,-0.245262,-0.330354,-0.438244,-0.509307,-0.643908,-0.799960,-0.866290,-0.987569,-1.123859,-1.030903,-1.120863,-1.149706,-1.049443,-1.000726,-1.058813,-1.056237,-1.024356,-0.991473,-0.995778,-0.849223,-0.816392,-0.860051,-0.913282,-1.034189,-1.155670,-1.132323,-0.902936,-0.679980,-0.417796,-0.202836,-0.041636,0.126087,0.220913,0.453530,0.744423,1.086345,1.488417,1.887178,2.182966,2.373606,2.534840,2.651432,2.785424,2.875817,3.264832,3.461326,3.676010,3.654998,3.551147,3.329696,3.036013,2.749427,2.402569,2.146338,1.871240,1.622272:0.816929,1.114894,1.524771,1.786935,2.085931,2.265161,2.475933,2.792574,3.118750,3.596972,4.044475,4.418788,4.868584,5.287258,5.641741,6.159891,6.795177,7.476318,8.269384,8.928307,9.469235,9.895754,10.380071,10.675723,10.777459,10.741007,10.717293,10.596328,10.345725,10.164207,9.857629,9.589579,9.259995,8.824116,8.404502,8.113000,7.894147,7.737945,7.540241,7.401524,7.178680,6.828605,6.303959,5.868216,5.584381,5.241315,4.972336,4.567796,4.157874,3.899555,3.727252,3.423352,3.177511,2.925132,2.706768,2.422787,2.085816,1.772456,1.465973,1.328188,1.191821,0.979084,0.827680,0.785945,0.703710,0.612320,0.630938,0.451092,0.170705,-0.086861,-0.374677,-0.747407,-1.116976,-1.531075,-2.071983,-2.518131,-2.849702,-3.121693,-3.374420,-3.496277,-3.553734,-3.476394,-3.455457,-3.394706,-3.214634,-2.986961,-2.835062,-2.736060,-2.573769,-2.502003,-2.330877,-2.123344,-2.070523,-2.141857,-2.102027,-2.006279,-2.015440,-2.068854,-2.069595,-2.312718,-2.801353,-3.095444,-3.472961,-3.912159,-4.201165,-4.512723,-4.678363,-4.836206,-4.925647,-4.827533,-4.631082,-4.268283,-3.663347,-3.290578,-2.769088,-2.148975,-1.538927,-0.968046,-0.489415,-0.048541,0.455486,0.796334,1.068888,1.406718,1.592241,1.875328,1.970454,1.944413,1.846331,2.076431,2.329370,2.608731,2.889406,3.108246,3.269910,3.416568,3.560732,3.689729,3.906806,4.071582,4.414370,4.504217,4.416208,4.195285:-0.208026,0.123097,0.612028,1.047969,1.272133,1.428167,1.571229,1.531755,1.541281,1.710157,1.825970,1.888532,2.028412,2.177230,2.159768,1.981089,1.774511,1.596222,1.414670,1.148800,0.817025,0.419517,0.007145,-0.392368,-0.871288,-1.564291,-2.384845,-3.042611,-3.562333,-4.311949,-4.935348,-5.469695,-6.022309,-6.673469,-7.283984,-7.676389,-8.088753,-8.447057,-8.659066,-8.840511,-9.046820,-9.180165,-9.282048,-9.174746,-9.097951,-8.777436,-8.582478,-8.573431,-8.523927,-8.291421,-8.033362,-7.721688,-7.447455,-7.065878,-6.838708,-6.515500,-6.036484,-5.780781,-5.470208,-5.215447,-4.941491,-4.780758,-4.510639,-4.268052,-4.001555,-3.653931,-3.183716,-2.919097,-2.715742,-2.447356,-2.100396,-1.571494,-0.958138,-0.325278,0.090245,0.379185,0.660647,0.725104,0.615301,0.355915,0.028588,-0.106363,-0.308903,-0.630031,-1.064085,-1.682734,-2.134519,-2.577668,-3.203513,-3.758972,-4.315623,-4.693028,-5.058047,-5.434756,-5.769826,-6.176252,-6.581864,-6.925838,-7.317742,-7.669776,-7.936414,-8.054168,-8.055755,-8.252930,-8.367240,-8.664226,-8.983246,-9.209853,-9.406979,-9.566044,-9.684692,-9.878618,-10.049495,-10.382124,-10.715021,-10.986621,-11.209749,-11.469393,-11.750567,-12.127312,-12.432825,-12.817373,-13.309007,-13.891605,-14.329653,-14.694241,-15.001140,-15.196400,-15.527137,-15.761013,-15.969693,-16.072079,-16.147513,-16.014161,-15.717014,-15.293911,-14.866320,-14.413749,-14.156818,-13.990506,-13.713944,-13.568590,-13.338703,-13.000852:1.141529,0.769944,0.407122,0.132082,-0.081533,-0.097785,-0.310669,-0.460685,-0.632313,-0.814090,-1.048219,-1.105351,-0.952482,-0.641106,-0.326448,-0.043502,0.234111,0.455761,0.930048,1.181946,1.282992,1.614182,1.890551,2.153327,2.428417,2.615831,2.688206,2.752734,2.791374,2.857719,2.822862,2.994297,3.377111,3.578673,4.033821,4.284625,4.467086,4.689106,4.971298,5.268946,5.528908,5.739938,5.922000,5.971340,5.941505,6.028103,5.932120,5.748372,5.513490,5.127413,4.836022,4.319736,3.835959,3.329035,2.814129,2.265153,1.801376,1.247701,0.601023,0.068108,-0.474389,-0.802381,-1.265720,-1.552480,-1.801922,-1.972583,-2.196079,-2.262357,-2.397664,-2.550262,-2.827985,-2.968424,-2.979244,-3.100830,-3.226853,-3.359404,-3.604338,-3.897944,-4.025819,-4.442775,-4.856434,-5.137742,-5.228497,-5.390711,-5.620935,-5.814541,-5.892370,-5.910592,-6.027763,-6.113758,-6.143683,-6.015846,-5.883136,-5.899778,-6.117256,-6.248409,-6.327611,-6.350281,-6.455200,-6.816089,-6.990450,-7.235783,-7.592700,-7.943796,-8.288159,-8.474994,-8.529180,-8.674235,-8.719025,-8.854278,-8.911660,-8.714456,-8.624534,-8.434492,-8.261530,-8.071535,-7.782789,-7.491563,-7.146445,-6.748215,-6.521317,-6.138826,-5.833962,-5.548642,-5.299593,-5.098682,-4.970693,-4.899014,-4.864631,-4.894166,-4.969999,-4.879452,-4.881642,-5.044333,-5.088916,-5.189931,-5.146182,-5.147782,-5.061173,-4.902121,-4.854518,-4.806684,-4.563158,-4.431629:-2.005073,-2.090529,-2.209606,-2.350962,-2.508659,-2.732945,-2.937948,-3.065861,-3.129419,-3.282023,-3.398704,-3.523226,-3.681570,-3.745712,-3.822875,-3.850350,-3.763554,-3.737616,-3.748849,-3.889005,-4.093275,-4.136275,-4.287611,-4.540889,-4.885001,-5.376261,-5.773762,-6.265069,-6.861523,-7.375071,-7.909810,-8.502664,-9.039912,-9.536558,-9.859742,-10.255478,-10.467749,-10.705851,-11.232779,-11.601734,-12.042542,-12.453781,-12.742114,-12.934238,-13.056030,-13.220551,-13.700848,-14.054941,-14.388821,-14.559524,-14.605703,-14.615423,-14.631413,-14.514923,-14.344998,-14.062546,-13.782956,-13.457251,-12.843182,-12.250109,-11.786700,-11.350351,-10.891499,-10.547049,-10.053002,-9.528123,-9.123899,-8.921479,-8.798427,-8.768553,-8.752172,-8.727167,-8.579438,-8.610895,-8.467651,-8.283730,-8.173014,-8.140114,-8.164635,-7.965135,-7.715479,-7.516822,-7.468493,-7.266475,-7.132404,-7.053779,-7.123763,-7.190441,-7.378867,-7.744282,-8.068583,-8.578158,-9.189253,-9.874173,-10.526241,-11.158325,-11.686204,-11.995763,-12.218143,-12.569733,-12.738536,-12.738481,-12.448899,-12.147114,-11.749548,-11.348831,-10.843593,-10.573644,-10.316344,-10.098272,-9.913340,-9.616003,-9.415871,-9.297772,-9.452572,-9.758287,-10.045607,-10.223040,-10.415942,-10.499091,-10.755332,-10.995564,-11.108474,-11.188288,-11.207944,-11.144721,-11.172763,-10.941482,-10.786412,-10.591766,-10.283652,-9.912024,-9.509716,-9.110298,-8.884919,-8.686811,-8.608502,-8.719127,-8.766311,-8.840111,-8.832102,-8.904758,-8.989305,-9.213618:-2.852270,-2.698083,-2.514155,-2.460781,-2.428301,-2.379835,-2.457296,-2.525703,-2.726581,-2.881114,-2.906024,-3.166689,-3.416389,-3.717884,-4.052624,-4.331183,-4.555078,-4.907655,-5.142619,-5.159314,-5.131404,-5.058172,-5.128427,-5.072371,-5.033306,-4.850256,-4.633005,-4.317208,-4.096895,-3.612972,-3.329269,-3.347224,-3.252317,-3.288378,-3.382969,-3.380609,-3.406007,-3.425789,-3.456276,-3.552146,-3.692007,-4.111700,-4.618452,-5.044285,-5.492063,-5.768489,-5.932459,-6.143234,-6.340650,-6.507102,-6.545679,-6.533440,-6.300947,-5.929424,-5.464146,-5.000359,-4.470953,-4.142202,-3.778985,-3.616025,-3.344883,-3.159494,-3.109836,-3.161851,-3.449725,-3.922996,-4.285697,-4.496738,-4.924153,-5.352339,-5.811748,-5.988895,-6.155590,-6.243982,-6.162991,-5.914848,-5.619733,-5.255607,-4.860095,-4.471712,-4.121241,-3.676252,-3.414346,-3.287195,-3.324758,-3.537973,-3.717649,-3.907881,-3.968732,-3.996497,-4.353605,-4.786096,-5.154800,-5.504618,-5.585346,-5.681600,-5.667106,-5.485167,-5.337106,-5.144679,-4.977711,-4.696172,-4.298237,-3.814605,-3.262239,-2.683496,-2.067707,-1.448079,-0.841059,-0.290803,0.147745,0.450014,0.683497,0.832342,1.085649,1.181751,1.274478,1.319676,1.207062,1.143566,0.965719,0.827857,0.817754,0.938554,0.994738,1.124416,1.320008,1.663448,1.937624,2.303780,2.728168,2.893928,3.065259,3.277377,3.337836,3.440647,3.785701,4.091567,4.118847,4.106775,4.199677,4.241976,4.283814,4.489681:1.0
2.105458,1.864058,1.897341,1.892626,2.058191,2.107509,2.291946,2.587406,2.849716,2.995650,2.911610,2.915052,2.936961,3.010653,2.962754,3.077049,3.122863,3.235127,3.255568,3.183369,3.064746,3.103401,3.376769,3.562926,3.806772,3.985205,4.191905,4.325754,4.497828,4.597157,4.794007,4.933904,5.287326,5.521746,5.584303,5.649622,5.583302,5.629561,5.461587,5.386892,5.054874,4.888977,4.602342,4.328825,3.919552,3.526593,3.061851,2.767609,2.727329,2.559077,2.436879,2.231972,2.391032,2.347566,2.356939,2.322453,2.395488,2.542260,2.884052,3.179571,3.144727,3.190478,3.288612,3.361212,3.417114,3.671515,3.792484,3.923333,3.884096,3.611950,3.447442,3.076983,2.948279,2.897271,2.787859,2.504512,2.029282,1.368298,0.809280,0.282503,-0.148425,-0.467129,-1.036091,-1.608009,-2.191335,-2.971981,-3.759192,-4.401502,-5.042798,-5.583605,-6.127025,-6.677453,-7.199095,-7.638704,-7.955009,-8.170300,-8.530140,-8.904433,-9.260694,-9.356235,-9.348244,-9.357190,-9.399308,-9.471024,-9.590582,-9.804830,-9.914518,-9.785346,-9.645326,-9.339085,-9.054275,-9.001337,-9.006949,-9.047929,-8.945403,-8.936330,-8.830482,-8.649156,-8.593838,-8.776704,-8.927162,-9.189440,-9.431207,-9.624000,-9.796982,-10.203564,-10.725215,-11.279512,-11.804086,-12.307488,-12.696365,-12.896136,-13.245458,-13.444124,-13.556140,-13.885054,-14.295653,-14.302244,-14.373210,-14.257056,-14.255226,-14.108682,-14.183653,-14.384237:10.181781,10.583793,11.017866,11.300973,11.506058,11.759761,11.928422,12.272938,12.552556,12.613802,12.636975,12.336595,12.085342,11.854496,11.463426,11.210037,10.854221,10.576675,10.298583,9.909142,9.611509,9.553041,9.452668,9.346325,9.249062,9.070012,9.145316,9.154285,9.426928,9.738875,10.162757,10.509214,10.839462,11.153168,11.550696,11.993416,12.354158,12.844563,13.282121,13.644615,13.801554,13.891740,13.975163,14.186742,14.132304,14.082725,14.027158,13.949398,14.072372,14.004139,13.895011,13.903226,13.814166,13.632894,13.476311,13.311655,13.462793,13.645255,13.780069,13.891261,13.772077,13.850456,13.935110,13.965742,14.132966,14.342020,14.608476,14.794441,15.062526,15.298851,15.551984,15.974566,16.349697,16.697118,17.074651,17.575391,18.044666,18.549638,18.944479,19.399481,19.721719,20.062844,20.300095,20.354012,20.508459,20.567022,20.586149,20.550386,20.542067,20.383571,20.327289,20.275830,20.103227,20.019411,19.891194,19.871288,19.984017,20.216258,20.367329,20.513300,20.611021,20.749084,20.637582,20.493694,20.390690,20.160976,20.068271,19.831561,19.422802,18.921348,18.433986,17.968911,17.555615,17.102198,16.814813,16.573196,16.405621,16.296810,16.125601,16.161479,16.263321,16.308030,16.635298,17.067819,17.477122,18.019640,18.530021,18.727150,18.907065,18.985622,19.207094,19.252538,19.265934,19.371068,19.237461,18.961494,18.659613,18.328324,17.977155,17.806998,17.569636,17.427881,17.269824,17.139486:-1.160744,-1.305162,-1.360455,-1.421317,-1.290372,-1.250524,-1.119155,-1.123107,-0.781203,-0.639479,-0.612551,-0.577080,-0.539634,-0.475118,-0.604077,-0.623812,-0.869918,-0.946159,-0.977731,-0.930107,-0.973127,-0.840490,-0.603699,-0.360131,-0.082876,0.133124,0.586321,0.902268,1.447276,1.751678,1.863735,1.915021,1.871756,1.693370,1.401669,1.075354,0.701059,0.283357,-0.197175,-0.562872,-1.190570,-1.723536,-2.084216,-2.593328,-3.074542,-3.499674,-3.873620,-4.174165,-4.344097,-4.339391,-4.381186,-4.433590,-4.317112,-4.140834,-4.013038,-3.845551,-3.580315,-3.353634,-3.134061,-2.832387,-2.554099,-2.382874,-2.114561,-1.870539,-1.646684,-1.503165,-1.536327,-1.388883,-1.356693,-1.284779,-1.066367,-0.837059,-0.656042,-0.473487,-0.287844,-0.204954,-0.268324,-0.261991,-0.152735,-0.061382,-0.039576,-0.100309,-0.369655,-0.786489,-1.269963,-1.697202,-2.236480,-2.568238,-2.730965,-2.968408,-3.168491,-3.478637,-3.674453,-3.803191,-3.883796,-3.906599,-3.846723,-3.725639,-3.611818,-3.671876,-3.874680,-4.172786,-4.586680,-4.954675,-5.336759,-5.536517,-5.669527,-5.892633,-5.995014,-6.320582,-6.340539,-6.364761,-6.374738,-6.346435,-6.151652,-6.142270,-6.204316,-6.474452,-6.809562,-6.984182,-7.326887,-7.427216,-7.808897,-8.081434,-8.235250,-8.300327,-8.355998,-8.123289,-7.805379,-7.503738,-7.023582,-6.632902,-6.098404,-5.802110,-5.402652,-5.036972,-4.784247,-4.451490,-4.258512,-4.128823,-3.912530,-3.675363,-3.699228,-3.614154:8.507914,8.841191,9.189326,9.459314,9.803228,9.938406,10.090281,10.170309,10.017245,9.892689,9.913197,9.761331,9.794339,9.777944,9.688517,9.536563,9.284980,9.058652,8.895673,8.743927,8.595644,8.420724,8.223587,8.076937,7.818426,7.462753,7.205795,7.062618,7.104938,7.181363,7.256941,7.417317,7.737936,8.099830,8.483930,8.891425,9.270376,9.639278,10.067188,10.497563,10.865004,11.174637,11.314825,11.366973,11.398493,11.374848,11.304305,11.180698,10.956494,10.808185,10.539316,10.439288,10.323419,10.250369,10.239623,10.349617,10.437550,10.592207,10.655230,10.562040,10.636461,10.719536,10.848079,10.789402,10.762795,10.679829,10.535534,10.187294,9.838605,9.584180,9.553302,9.739027,9.771424,9.913995,10.150245,10.255039,10.285279,10.403891,10.610549,10.934741,11.347613,11.615932,11.835980,12.069355,12.392461,12.507318,12.426701,12.610316,12.808369,13.115164,13.419997,13.878635,14.340827,14.808719,15.102199,15.418754,15.772393,16.258792,16.869026,17.396686,17.805659,18.084091,18.443263,18.634065,18.579196,18.535179,18.453450,18.237099,17.822392,17.299818,16.786908,16.215992,15.853140,15.554527,15.116578,14.627151,14.346479,14.098541,13.963195,14.003580,14.319250,14.505998,14.713355,14.988754,15.088113,15.010908,14.937412,14.964770,14.841923,14.678807,14.451419,14.255624,13.928094,13.762312,13.439646,13.095620,12.886527,12.888657,12.944416,12.925050,12.866813,12.888216,12.880382,12.744766:1.159950,0.553862,-0.092247,-0.713686,-1.368281,-2.068851,-2.334775,-2.760867,-3.016427,-3.258004,-3.513907,-3.845718,-4.300243,-4.807777,-5.096523,-5.272226,-5.349785,-5.500926,-5.852770,-6.095764,-6.531372,-6.875662,-7.103490,-7.203820,-7.173216,-6.965869,-7.085235,-7.293094,-7.391348,-7.417626,-7.345935,-7.165538,-6.850863,-6.634613,-6.579976,-6.536295,-6.447019,-6.391185,-6.051017,-5.810532,-5.622053,-5.434236,-5.271113,-5.167944,-5.029616,-4.909633,-4.707530,-4.499926,-4.381286,-4.324139,-4.358243,-4.434657,-4.574779,-4.783260,-5.047135,-5.226219,-5.416945,-5.420602,-5.556196,-5.680194,-5.572578,-5.309259,-5.043151,-4.606153,-4.232709,-3.985509,-3.601235,-3.255984,-2.918060,-2.684444,-2.358858,-2.033949,-1.770569,-1.679675,-1.598867,-1.643672,-1.757438,-1.545904,-1.413263,-1.401620,-1.352793,-1.307716,-1.290489,-1.299997,-1.456217,-1.608481,-1.792452,-1.823131,-1.764146,-1.855818,-1.947829,-2.110011,-2.352644,-2.701148,-2.967634,-3.070066,-3.217378,-3.281302,-3.390611,-3.630645,-4.004429,-4.363472,-4.735812,-4.924692,-5.061637,-4.988944,-5.010944,-5.127925,-5.277807,-5.411325,-5.592219,-5.641100,-5.570452,-5.530526,-5.420313,-5.324889,-5.333765,-5.442293,-5.555620,-5.773523,-5.861080,-5.938912,-6.019434,-6.160190,-6.315637,-6.539932,-6.778217,-7.045758,-7.269897,-7.455630,-7.560854,-7.736713,-7.992123,-8.202054,-8.255660,-8.462211,-8.635907,-8.597355,-8.538136,-8.487706,-8.466811,-8.387216,-8.350048,-8.281736:5.847851,5.844468,5.992854,6.184698,6.272748,6.456354,6.421584,6.398039,6.263295,5.889374,5.599171,5.415465,5.182039,5.054138,4.762374,4.434631,3.998827,3.563848,3.269963,2.977707,2.724828,2.508559,2.379025,2.391364,2.378883,2.207021,2.030620,2.045761,2.339307,2.617598,2.845422,3.147615,3.429954,3.632211,3.811046,3.819994,3.818692,3.784432,3.752405,3.628886,3.272238,2.853095,2.362162,1.767602,1.374146,1.082322,0.792056,0.596377,0.321936,0.230457,0.251616,0.341056,0.533874,0.848334,1.164128,1.440534,1.737614,2.048254,2.182888,2.340617,2.513105,2.627771,2.808092,2.826225,2.658942,2.413403,2.371198,2.387869,2.163435,1.863853,1.687479,1.482483,1.389393,1.368493,1.335506,1.437180,1.680121,1.960002,2.142229,2.437384,2.978979,3.607172,4.279522,4.953767,5.672447,6.161695,6.687929,7.158226,7.699619,8.279372,8.866577,9.275112,9.545824,9.776127,9.902107,9.863239,9.783317,9.845997,9.792896,9.602356,9.432201,9.206245,8.812420,8.460823,8.146525,7.743490,7.480198,7.363910,7.364901,7.362434,7.355341,7.577377,7.748220,8.024154,8.509160,8.924285,9.450839,10.268207,10.940553,11.637512,12.160284,12.750798,13.365925,13.828872,14.301360,14.756287,15.139662,15.584629,15.999943,16.258813,16.456864,16.729445,17.155483,17.471038,17.730090,18.038149,18.403079,18.728364,18.954127,19.187405,19.282558,19.326800,19.475560,19.529916:1.920021,1.355258,0.948782,0.548755,-0.049933,-0.501594,-1.087463,-1.634520,-2.179551,-2.592964,-3.030861,-3.304206,-3.520948,-3.519039,-3.715089,-3.934746,-4.129878,-4.444595,-4.714185,-4.933795,-5.318366,-5.658462,-6.079540,-6.579900,-6.901986,-7.069548,-7.100201,-7.247638,-7.441583,-7.687951,-7.771177,-8.001937,-8.121567,-8.310122,-8.520099,-8.656311,-8.923021,-9.538066,-10.084759,-10.691234,-11.194470,-11.639787,-12.085816,-12.174301,-12.164510,-12.240129,-12.102905,-12.030774,-11.948144,-11.753837,-11.517124,-11.347925,-11.325523,-11.354948,-11.327764,-11.647112,-12.074918,-12.491713,-13.058398,-13.402850,-13.835540,-14.450772,-15.163186,-15.639844,-15.979175,-16.317595,-16.748285,-17.032489,-17.202328,-17.327662,-17.455202,-17.675940,-17.760552,-17.456045,-17.306994,-17.171001,-17.127467,-17.045041,-16.928351,-16.754025,-16.607094,-16.254548,-15.970719,-15.791684,-15.793194,-15.992622,-16.120650,-16.282813,-16.423976,-16.443957,-16.596342,-16.696402,-16.861464,-17.149466,-17.404400,-17.781577,-17.934533,-18.083544,-18.278696,-18.392766,-18.447454,-18.614470,-18.803144,-18.975508,-19.049990,-19.232978,-19.373148,-19.166365,-18.947138,-18.712628,-18.389939,-18.206223,-18.000680,-17.711410,-17.263905,-16.897821,-16.556578,-16.133372,-15.799899,-15.536260,-15.531296,-15.461933,-15.383174,-15.265199,-15.210165,-15.140414,-15.144096,-15.264843,-15.360769,-15.504844,-15.709641,-15.880368,-15.814064,-15.729699,-15.635535,-15.561755,-15.248623,-15.000580,-14.820890,-14.602265,-14.351195,-14.107413,-13.824249,-13.637260:-10.680835,-10.781638,-11.156303,-11.402942,-11.566680,-11.837729,-12.019109,-12.090084,-12.147845,-12.163351,-12.006657,-12.252718,-12.458602,-12.474210,-12.070726,-11.794864,-11.456926,-11.211596,-11.009120,-10.857863,-10.807215,-10.835734,-11.068663,-11.199862,-11.285119,-11.691921,-12.321003,-13.071308,-13.828546,-14.471731,-15.219947,-16.056341,-16.753871,-17.505470,-18.086585,-18.609100,-19.104375,-19.438165,-19.791127,-19.939992,-20.064555,-20.092325,-20.018142,-19.764932,-19.600624,-19.278300,-19.162081,-19.105720,-19.248439,-19.372936,-19.520858,-19.644130,-19.817275,-20.061793,-20.215875,-20.378875,-20.546605,-20.577674,-20.622073,-20.733219,-20.745836,-20.681800,-20.475963,-20.242728,-20.120007,-20.071250,-20.149215,-20.360433,-20.595363,-21.026143,-21.288012,-21.279321,-21.202141,-21.082003,-21.071631,-21.059025,-21.013895,-20.914863,-20.768136,-20.511156,-20.084561,-19.540677,-19.087986,-18.891741,-18.712761,-18.754325,-18.850902,-18.936721,-19.089296,-19.165817,-19.047137,-19.007087,-18.874578,-18.839913,-18.766158,-18.393299,-17.992382,-17.526570,-16.898851,-16.623763,-16.269895,-15.996861,-15.901267,-15.731156,-15.713417,-15.630118,-15.670843,-15.794220,-16.059708,-16.216498,-16.554991,-16.638609,-16.549686,-16.384676,-16.349351,-16.255815,-16.111355,-16.107842,-16.030321,-15.980023,-15.825118,-15.803028,-15.619637,-15.257023,-15.047242,-14.672282,-14.271804,-13.931015,-13.723551,-13.439880,-13.108584,-12.876208,-12.660972,-12.365626,-12.029323,-11.970339,-12.049955,-12.255428,-12.414436,-12.589942,-12.800033,-12.981008,-13.134941,-13.084810:-0.273759,-0.862824,-1.507502,-2.091047,-2.734563,-3.399342,-3.957427,-4.471564,-4.928335,-5.397906,-5.915088,-6.473340,-6.777805,-7.255973,-7.566058,-7.975840,-8.412029,-8.767199,-9.198058,-9.790981,-10.443742,-11.017261,-11.531500,-11.736108,-12.185789,-12.681419,-13.446171,-14.201045,-15.061470,-15.877854,-16.658493,-17.318021,-17.681610,-18.104392,-18.496009,-18.949719,-19.276737,-19.449299,-19.329663,-19.187829,-18.980699,-18.910710,-18.843972,-18.622268,-18.453870,-18.122254,-17.626095,-17.197068,-16.846755,-16.615560,-16.496727,-16.432595,-16.439655,-16.537818,-16.566532,-16.622126,-16.795764,-16.981596,-17.293426,-17.702576,-18.063900,-18.387483,-18.807194,-19.175865,-19.470095,-19.679724,-19.804543,-20.147823,-20.455786,-20.823973,-21.036260,-21.208250,-21.236455,-21.241714,-21.266164,-21.313301,-21.308889,-21.237232,-21.263164,-21.289540,-21.312324,-21.442551,-21.745754,-21.909499,-22.183194,-22.561095,-22.677629,-22.863968,-23.202132,-23.541814,-24.198442,-24.624886,-24.992090,-25.439034,-25.784938,-26.128652,-26.423934,-26.515006,-26.704925,-26.816701,-26.807645,-26.932589,-26.845473,-26.813580,-26.721886,-26.309159,-25.980349,-25.688891,-25.498004,-25.528861,-25.536015,-25.546066,-25.463709,-25.229071,-24.975632,-24.753035,-24.728095,-24.837514,-24.908148,-25.116733,-25.273605,-25.253348,-25.149256,-25.040295,-24.896399,-24.871261,-24.843026,-24.801925,-24.864125,-24.938970,-25.068038,-25.022998,-24.959059,-24.893487,-25.070067,-25.067379,-25.181785,-25.261923,-25.367367,-25.373135,-25.197884,-25.054346,-24.779243,-24.670488:2.0
3.725459,3.748230,3.789343,4.080954,4.332745,4.544222,4.908699,5.317819,5.848732,6.356618,6.755299,7.071866,7.428995,7.650379,7.846389,7.863310,7.905499,8.072939,8.170335,8.166870,8.155360,8.153061,8.142372,8.233059,8.356835,8.451306,8.682189,8.964414,9.224470,9.512236,9.818894,10.031506,10.197277,10.410874,10.607735,10.634592,10.646308,10.625968,10.559718,10.383484,10.234544,9.894272,9.494524,9.157884,8.940052,8.622997,8.335698,7.992395,7.614949,7.507005,7.277066,7.211744,7.134872,7.199616,7.167366,7.105028,7.125350,7.251194,7.420831,7.720897,7.856427,7.926364,7.956973,7.920905,7.905424,7.883594,7.922082,8.094208,8.117497,7.882554,7.606834,7.314777,7.187270,7.153558,7.085022,7.036642,6.809555,6.584761,6.484484,6.302504,6.127827,5.954319,5.893452,5.803748,5.694090,5.546745,5.313452,4.925420,4.684055,4.458652,4.080212,3.761613,3.446689,3.334342,2.925266,2.564543,2.171372,1.872165,1.660657,1.459122,1.204645,0.796907,0.511603,0.216618,-0.140796,-0.534097,-0.677066,-0.871393,-0.995862,-1.309387,-1.461538,-1.451307,-1.276729,-1.059970,-0.855368,-0.626655,-0.334318,-0.144976,-0.107658,0.071902,0.274815,0.422889,0.551136,0.660256,0.666182,0.839344,1.184240,1.386617,1.662096,1.960122,2.269258,2.712693,3.165715,3.601814,3.894564,4.066154,4.275305,4.436609,4.429570,4.510206,4.551645,4.712624,4.913789,4.999657:0.595154,0.736319,0.875638,0.990844,1.376064,1.790351,2.051271,2.207474,2.135773,1.936098,1.671774,1.590937,1.577572,1.515026,1.519735,1.480594,1.483940,1.378831,1.639147,1.811837,2.160433,2.651966,3.227902,3.754595,4.183955,4.559071,4.928490,5.306374,5.701489,6.411584,6.845474,7.312617,7.637669,7.938343,8.175700,8.507320,8.821768,9.186372,9.535697,9.825198,10.054176,10.117194,10.011749,9.977712,10.067358,10.003429,10.004774,9.905540,9.952016,9.980903,9.890333,9.786401,9.537540,9.293293,9.263631,8.996802,8.768640,8.652443,8.591518,8.570688,8.470362,8.371460,8.425741,8.679721,8.935831,9.216394,9.452726,10.038226,10.434383,10.870682,11.017719,11.106175,11.167310,11.137486,11.168990,11.077634,11.036796,10.782556,10.550594,10.237082,10.097852,10.031943,10.196550,10.451965,10.821231,11.330427,11.597990,11.824590,12.067075,12.488596,12.964437,13.271971,13.500261,13.489653,13.660342,13.707961,13.758707,13.704629,13.818259,13.898334,14.012746,13.950567,13.712006,13.567966,13.531925,13.618412,13.454181,13.326409,13.151342,12.968002,12.726211,12.570924,12.471659,12.510042,12.571544,12.567585,12.491563,12.231611,11.977365,11.682343,11.333990,11.052143,10.837450,10.669066,10.211773,9.783141,9.411148,9.177836,9.071961,9.189771,9.300681,9.513261,9.871811,10.311345,10.613401,10.819360,11.292830,11.612943,11.977149,12.317257,12.515875,12.605929,12.792150,12.851211:-7.603196,-7.420690,-7.276769,-7.278649,-7.162224,-6.869954,-6.604063,-6.334897,-6.117642,-5.803026,-5.641213,-5.573424,-5.525179,-5.421463,-5.323387,-5.109672,-5.091622,-5.244071,-5.442339,-5.807198,-6.098497,-6.442607,-6.807205,-7.120158,-7.359669,-7.583216,-7.869994,-8.276197,-8.621005,-9.006733,-9.198147,-9.172151,-9.296916,-9.456988,-9.528357,-9.492974,-9.462882,-9.491124,-9.370833,-9.118230,-8.899839,-8.648150,-8.546111,-8.483534,-8.457397,-8.435588,-8.395643,-8.447260,-8.628994,-8.780053,-9.007513,-9.195745,-9.402525,-9.619751,-9.870195,-10.124564,-10.286095,-10.235563,-10.108434,-9.920891,-9.684432,-9.444819,-9.145349,-8.906786,-8.503712,-8.087163,-7.680638,-7.187655,-6.718249,-6.324540,-5.907982,-5.558651,-5.159741,-4.939141,-4.716738,-4.514292,-4.388907,-4.238776,-3.919654,-3.663074,-3.433156,-3.241297,-3.030885,-2.746797,-2.455106,-1.996963,-1.605922,-1.297177,-0.977523,-0.763551,-0.672505,-0.681836,-0.460941,-0.278008,-0.211427,-0.184746,-0.175275,-0.188457,-0.112496,0.004417,-0.022755,-0.031985,-0.059290,0.017239,-0.204930,-0.397101,-0.475628,-0.425039,-0.401021,-0.259117,-0.040658,0.247918,0.711535,1.188282,1.651756,2.035685,2.518821,2.913414,3.177258,3.389743,3.641087,3.899587,3.945035,3.982015,3.932353,3.955348,4.107665,4.257553,4.371803,4.529981,4.585094,4.579822,4.772592,4.981457,5.255653,5.467734,5.720264,5.893219,6.017475,6.123293,6.204036,6.259240,6.370259,6.422024:3.832603,3.138994,2.385963,1.705515,1.149770,0.636888,0.140811,-0.289006,-0.782777,-1.302251,-1.446918,-1.519627,-1.610002,-1.852570,-2.028859,-2.151234,-2.371317,-2.523133,-2.855663,-3.222659,-3.522119,-3.808900,-4.290739,-4.849129,-5.353229,-5.701247,-6.156485,-6.651353,-7.193716,-7.782767,-8.242343,-8.717816,-9.175757,-9.522610,-9.871504,-10.178725,-10.662452,-11.292098,-11.761812,-12.211249,-12.616477,-13.006918,-13.314415,-13.548498,-13.664625,-13.887647,-14.016888,-14.222909,-14.053720,-13.732773,-13.454218,-13.160217,-12.787512,-12.456303,-12.224089,-11.974077,-11.687895,-11.349760,-11.033657,-10.666114,-10.583951,-10.669438,-10.755900,-10.857332,-10.902313,-10.876430,-10.712302,-10.645660,-10.727364,-10.931205,-11.171459,-11.390874,-11.593987,-11.488298,-11.547558,-11.527689,-11.509539,-11.326476,-11.228313,-11.042301,-10.707330,-10.173830,-9.595170,-9.207192,-8.612280,-8.227374,-7.819207,-7.438032,-7.104880,-6.895038,-6.864241,-6.932573,-7.091364,-7.306901,-7.506693,-7.607988,-7.912554,-8.212133,-8.410756,-8.798305,-9.290951,-9.877383,-10.425335,-10.972111,-11.552068,-12.179458,-12.858969,-13.511223,-14.255420,-14.804376,-15.367912,-15.848200,-16.304408,-16.623948,-17.108014,-17.525333,-17.960491,-18.448497,-18.930455,-19.388251,-19.798912,-20.381151,-20.906570,-21.350576,-21.827341,-22.418058,-22.763674,-23.259139,-23.639375,-24.036507,-24.300013,-24.634343,-24.879445,-25.140289,-25.443602,-25.694129,-25.831032,-25.879991,-25.818762,-25.775441,-25.623690,-25.475077,-25.317678,-25.177172:1.304743,1.170432,0.763245,0.355325,-0.034792,-0.260386,-0.674675,-1.214245,-1.617243,-1.728165,-1.967517,-2.172639,-2.413199,-2.622119,-2.582628,-2.427457,-2.173236,-2.027118,-1.787390,-1.303800,-0.947624,-0.974534,-0.792161,-0.660815,-0.524829,-0.559946,-0.682030,-0.976489,-1.279197,-1.534341,-1.825881,-2.282685,-2.668243,-3.048474,-3.440314,-3.715530,-3.886566,-3.904128,-3.700914,-3.220209,-2.759195,-2.370413,-1.895304,-1.348360,-0.908032,-0.373649,0.068986,0.646014,1.227994,1.821031,2.340887,2.784102,3.283560,3.794635,4.173155,4.338679,4.552944,4.680505,4.853999,4.803836,4.749353,4.706996,4.713950,4.875527,5.023165,5.090495,5.154172,5.319488,5.365383,5.656648,5.733952,5.851008,5.980568,6.174461,6.382370,6.321895,6.050422,5.773516,5.554606,5.313187,5.267256,5.101617,5.088514,5.091580,4.898905,4.567575,3.972131,3.252460,2.632572,1.983472,1.286166,0.599289,-0.141009,-0.831739,-1.547539,-2.218570,-2.833734,-3.363622,-3.939412,-4.367579,-4.659153,-4.806546,-4.869991,-5.046777,-5.254977,-5.571934,-5.851418,-6.199178,-6.683866,-7.152943,-7.453432,-7.754881,-8.360439,-8.715498,-9.203382,-9.392685,-9.683251,-10.006630,-10.296711,-10.534801,-10.510588,-10.596904,-10.613360,-10.384020,-10.025761,-9.891865,-9.597183,-9.428445,-9.090994,-8.623696,-8.045073,-7.640918,-7.333943,-7.007305,-6.918892,-6.991658,-7.056303,-7.230895,-7.514306,-7.808138,-8.128389,-8.411053,-8.760785,-8.857059:4.277412,4.001786,3.657226,3.406019,3.163323,3.171218,3.158870,3.404440,3.598671,3.769137,4.114445,4.399793,4.845194,5.375257,6.003487,6.606413,7.252991,7.790266,8.166160,8.363581,8.747026,9.138479,9.427244,10.092459,10.509607,10.801229,10.947774,11.138797,11.262739,11.249473,11.174942,11.108337,10.900837,10.753351,10.749144,10.487740,10.283410,10.075721,9.946455,9.652663,9.587401,9.703748,10.044478,10.378678,10.660651,11.001116,11.255981,11.496659,11.835533,12.249511,12.552858,13.028254,13.300277,13.534996,13.709330,13.643716,13.513553,13.167197,12.832564,12.456532,12.072748,11.748073,11.460726,11.130614,10.819741,10.411847,9.888570,9.590633,9.375091,9.192215,9.069369,9.101600,9.072998,8.917018,8.903481,9.081810,9.260507,9.470046,9.670908,9.953235,10.311951,10.675680,10.966065,11.234568,11.496277,11.809904,11.983926,11.956723,11.790774,11.666638,11.537090,11.308309,10.918453,10.518473,10.217909,9.912827,9.686544,9.416422,9.137361,8.988910,9.031824,9.049514,9.255561,9.413553,9.737323,10.153906,10.597728,10.829442,11.007857,11.210636,11.422793,11.485605,11.460649,11.448731,11.207700,11.159518,11.167069,11.128025,11.129543,11.274668,11.437694,11.584175,11.862183,12.059484,12.224774,12.378726,12.741702,13.120044,13.523086,13.889272,14.197317,14.452179,14.753166,15.029538,15.158188,15.260109,15.499122,15.721280,15.748138,15.508777,15.129132,14.729299,14.285337,13.934861:6.488220,6.542400,6.924066,7.351914,7.774793,7.936807,7.941028,7.859859,7.488516,6.880555,6.230114,5.680456,5.322725,5.066476,4.508962,4.140039,3.911591,3.803520,3.710918,3.616986,3.490783,3.680404,3.887324,4.207622,4.376607,4.361006,4.373180,4.374299,4.247977,4.048030,3.861333,3.688491,3.686943,3.519058,3.490579,3.310102,3.230680,3.229284,3.300956,3.313927,3.250970,3.196572,3.184715,3.212783,3.246377,3.343943,3.345776,3.368868,3.449518,3.632039,3.640981,3.603635,3.687986,3.907991,4.160420,4.460531,4.686811,4.890234,5.126010,5.439099,5.486947,5.507964,5.541429,5.496852,5.508593,5.415961,5.315136,5.288857,5.335401,5.312178,5.049772,4.797458,4.739224,4.746323,4.885132,5.149088,5.393225,5.789040,6.024715,6.086563,6.099578,6.208667,6.537705,6.862087,7.175022,7.361813,7.621016,7.871246,7.923376,7.743644,7.414875,7.169006,6.879197,6.649880,6.427616,6.193286,5.985264,5.912053,5.730823,5.455512,5.243413,5.209467,5.531066,5.947253,6.456821,6.895185,7.261635,7.702118,8.064593,8.264614,8.534611,8.882516,9.338242,9.759708,9.895552,9.858919,9.742072,9.815420,9.857069,9.873196,9.904726,10.087828,10.234507,10.148928,9.931826,9.748141,9.818772,10.011540,10.065776,9.907168,9.773643,9.541313,9.279037,8.859075,8.480234,8.269582,8.127651,7.858445,7.407272,7.029391,6.816797,6.590793,6.269951,5.966546:1.229587,0.887319,0.644126,0.411200,0.247757,0.050456,-0.116724,-0.227976,-0.580647,-0.926589,-1.211057,-1.253060,-1.489006,-1.623182,-1.749899,-1.662335,-1.501910,-1.332876,-1.163538,-0.886539,-0.581413,-0.201797,0.026424,0.214321,0.473204,0.545972,0.534728,0.217712,-0.001820,-0.174955,-0.434370,-0.692982,-0.847333,-1.111376,-1.227269,-1.445551,-1.851476,-2.099853,-2.369569,-2.592107,-3.002761,-3.307687,-3.520616,-3.756616,-3.880069,-3.898762,-3.912030,-3.823365,-3.401347,-2.941953,-2.374890,-1.714514,-1.149858,-0.897275,-0.656544,-0.543195,-0.537233,-0.350245,-0.180852,-0.160036,-0.404258,-0.566775,-0.769236,-1.107657,-1.340325,-1.341068,-1.277421,-1.227173,-1.297071,-1.352132,-1.544141,-1.722877,-1.775286,-1.997123,-2.211023,-2.480493,-2.709540,-2.866273,-3.134769,-3.674320,-4.043611,-4.472423,-4.863785,-5.243783,-5.649566,-6.095275,-6.607248,-6.877591,-7.148455,-7.490547,-7.749005,-7.774079,-7.898601,-8.164966,-8.440055,-8.426434,-8.489561,-8.453156,-8.339994,-8.343147,-8.304218,-8.137467,-8.014969,-7.746189,-7.497931,-7.157707,-6.594053,-6.299746,-5.882230,-5.337706,-4.864337,-4.371172,-3.905358,-3.729679,-3.486112,-3.315245,-3.128208,-3.057820,-3.098134,-2.987862,-2.920720,-2.952408,-2.915034,-2.794113,-2.811355,-2.680310,-2.706140,-2.705822,-2.730185,-2.579904,-2.445092,-2.468462,-2.593324,-2.753294,-2.835895,-3.023161,-3.093189,-3.323069,-3.441301,-3.323175,-3.156493,-3.033302,-2.958686,-2.855002:-3.799041,-4.480492,-5.284071,-5.722179,-5.962060,-6.196643,-6.304682,-6.089642,-5.864767,-5.751754,-5.597679,-5.448451,-5.056276,-4.624859,-3.966453,-3.407987,-2.850019,-2.222196,-1.641782,-1.140344,-0.691919,-0.423679,-0.004709,0.541129,0.964270,1.377984,1.721658,2.040260,2.263340,2.399005,2.619375,2.625375,2.682980,2.907355,2.979558,2.991108,3.143527,3.120448,3.163229,3.197632,3.282249,3.319568,3.349561,3.572198,3.682516,3.820745,3.974581,4.037004,4.012634,4.129910,4.226302,4.267740,4.140845,4.160619,4.238834,4.441229,4.468174,4.184716,4.066565,4.107656,4.221696,4.385258,4.573488,4.847626,5.200079,5.591055,5.833311,5.849092,6.218179,6.764459,7.267338,7.612220,7.846098,8.014888,8.203930,8.422492,8.676964,8.762937,8.824075,8.970161,8.886382,8.877479,8.942422,8.951330,9.186612,9.452890,9.783178,10.064573,10.399497,10.914836,11.559390,12.276513,13.239802,14.098387,14.782432,15.433302,15.925455,16.192841,16.420431,16.483347,16.446783,16.254971,16.135674,16.015050,15.744464,15.453294,15.239780,15.093546,14.910435,14.889948,14.724133,14.665840,14.725253,14.751220,14.708809,14.622432,14.533917,14.595540,14.822935,15.114761,15.319998,15.477575,15.604799,15.812830,16.015531,16.334568,16.690294,17.109436,17.381384,17.545277,17.441014,17.189923,17.071738,16.889903,16.649404,16.351675,15.957660,15.477678,14.858650,14.224696,13.698341,13.329052,13.047586,12.893749:3.0
