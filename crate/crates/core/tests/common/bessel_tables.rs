//! mpmath (40 digit) reference values: (order, x, J_order(x), sqrt(J^2 + Y^2)).
#![allow(clippy::excessive_precision)]

pub const J_TABLE: &[(u32, f64, f64, f64)] = &[
    (0, 1e-08, 9.99999999999999975e-1, 11.8431),
    (0, 0.001, 9.99999750000015625e-1, 4.58187),
    (0, 0.1, 9.97501562066040032e-1, 1.83),
    (0, 0.5, 9.3846980724081290423e-1, 1.03842),
    (0, 1.0, 7.6519768655796655145e-1, 0.770271),
    (0, 2.5, -4.8383776468197996327e-2, 0.500415),
    (0, 7.3, 2.8821694763501439904e-1, 0.294974),
    (0, 12.0, 4.7689310796833536624e-2, 0.230231),
    (0, 19.9, 1.7287775639261846235e-1, 0.178832),
    (0, 20.1, 1.5953606793729709074e-1, 0.177941),
    (0, 33.3, 6.3338485947521251681e-2, 0.138259),
    (0, 50.0, 5.5812327669251815005e-2, 0.112835),
    (0, 99.5, -1.9543066407440783557e-2, 0.0799882),
    (0, 150.0, -7.7409037539429124695e-4, 0.0651468),
    (0, 333.0, 3.0631741385032203853e-2, 0.0437238),
    (0, 511.0, 1.0243438602714132949e-2, 0.0352963),
    (0, 700.0, -6.2882724650687667615e-3, 0.0301572),
    (0, 1234.5, -1.3550379618035721909e-2, 0.0227088),
    (0, 5000.0, -6.6489842514483478936e-3, 0.0112838),
    (0, 9999.0, -7.6458748603919629508e-4, 0.00797924),
    (1, 1e-08, 5.0000000000000000421e-9, 6.3662e+7),
    (1, 0.001, 4.9999993750000261457e-4, 636.622),
    (1, 0.1, 4.9937526036242000321e-2, 6.45914),
    (1, 0.5, 2.4226845767487388638e-1, 1.49128),
    (1, 1.0, 4.4005058574493351596e-1, 0.896626),
    (1, 2.5, 4.9709410246427403801e-1, 0.518068),
    (1, 7.3, 8.2570430493257831051e-2, 0.296331),
    (1, 12.0, -2.2344710449062761237e-1, 0.230627),
    (1, 19.9, 5.0117424807379740922e-2, 0.178945),
    (1, 20.1, 8.2801005760209763489e-2, 0.17805),
    (1, 33.3, 1.2386214790148009055e-1, 0.13829),
    (1, 50.0, -9.7511828125175137661e-2, 0.112846),
    (1, 99.5, -7.766319824307693544e-2, 0.0799902),
    (1, 150.0, -6.5145163657727360305e-2, 0.0651475),
    (1, 333.0, -3.1154447962004306319e-2, 0.0437239),
    (1, 511.0, 3.3787289222896205644e-2, 0.0352964),
    (1, 700.0, 2.948982408403033108e-2, 0.0301572),
    (1, 1234.5, 1.821750833739249827e-2, 0.0227088),
    (1, 5000.0, -9.1174057136461594787e-3, 0.0112838),
    (1, 9999.0, 7.9424897098126263364e-3, 0.00797924),
    (2, 1e-08, 1.2500000000000000419e-17, 1.27324e+16),
    (2, 0.001, 1.2499998958333366406e-7, 1.27324e+6),
    (2, 0.1, 1.248958658799918984e-3, 127.645),
    (2, 0.5, 3.0604023458682641307e-2, 5.44146),
    (2, 1.0, 1.1490348493190048047e-1, 1.65468),
    (2, 2.5, 4.4605905843961722674e-1, 0.586844),
    (2, 7.3, -2.6559491188343691053e-1, 0.300582),
    (2, 12.0, -8.4930494878604805352e-2, 0.231838),
    (2, 19.9, -1.6784082927629889004e-1, 0.179284),
    (2, 20.1, -1.5129716189150507505e-1, 0.178382),
    (2, 33.3, -5.5899317905390314677e-2, 0.138384),
    (2, 50.0, -5.9712800794258820511e-2, 0.11288),
    (2, 99.5, 1.7981997096022151688e-2, 0.0799963),
    (2, 150.0, -9.4511806708740223781e-5, 0.0651497),
    (2, 333.0, -3.0818855186605803291e-2, 0.0437242),
    (2, 511.0, -1.0111198723172464825e-2, 0.0352965),
    (2, 700.0, 6.3725291053088534218e-3, 0.0301573),
    (2, 1234.5, 1.3579893604811570428e-2, 0.0227088),
    (2, 5000.0, 6.6453372891628894298e-3, 0.0112838),
    (2, 9999.0, 7.6617614284683958467e-4, 0.00797924),
    (3, 1e-08, 2.0833333333333334511e-26, 5.09296e+24),
    (3, 0.001, 2.0833332031250033853e-11, 5.09296e+9),
    (3, 0.1, 2.0820315754756264895e-5, 5099.33),
    (3, 0.5, 2.5637299945872440754e-3, 42.0595),
    (3, 1.0, 1.9563353982668405919e-2, 5.82155),
    (3, 2.5, 2.1660039103911352477e-1, 0.78647),
    (3, 7.3, -2.2810188905952463488e-1, 0.308344),
    (3, 12.0, 1.9513693953109267725e-1, 0.233925),
    (3, 19.9, -8.3854274913168464947e-2, 0.179858),
    (3, 20.1, -1.129098936988177365e-1, 0.178941),
    (3, 33.3, -1.3057678068290835715e-1, 0.138541),
    (3, 50.0, 9.2734804061634432021e-2, 0.112937),
    (3, 99.5, 7.8386092598695916412e-2, 0.0800064),
    (3, 150.0, 6.5142643342881793899e-2, 0.0651533),
    (3, 333.0, 3.0784251503306338712e-2, 0.0437247),
    (3, 511.0, -3.3866437549496381494e-2, 0.0352966),
    (3, 700.0, -2.9453409631999994775e-2, 0.0301573),
    (3, 1234.5, -1.8173507062042764547e-2, 0.0227088),
    (3, 5000.0, 9.1227219834774897902e-3, 0.0112838),
    (3, 9999.0, -7.9421832087053768756e-3, 0.00797924),
    (5, 1e-08, 2.6041666666666669282e-44, 2.44462e+42),
    (5, 0.001, 2.6041665581597244309e-19, 2.44462e+17),
    (5, 0.1, 2.6030817909644415564e-9, 2.44615e+7),
    (5, 0.5, 8.053627241357474086e-6, 7946.3),
    (5, 1.0, 2.4975773021123443138e-4, 260.406),
    (5, 2.5, 1.9501625134503219886e-2, 3.83023),
    (5, 7.3, 3.1370617089730907746e-1, 0.340988),
    (5, 12.0, -7.3470963101658581266e-2, 0.241276),
    (5, 19.9, 1.4116407725390404816e-1, 0.181757),
    (5, 20.1, 1.5971296474807583348e-1, 0.180791),
    (5, 33.3, 1.383538305410695624e-1, 0.139048),
    (5, 50.0, -8.1400247696569639644e-2, 0.113119),
    (5, 99.5, -7.945183712471255526e-2, 0.0800387),
    (5, 150.0, -6.4998631740725846593e-2, 0.0651649),
    (5, 333.0, -3.0030533151718024594e-2, 0.0437262),
    (5, 511.0, 3.4018508778459020309e-2, 0.0352972),
    (5, 700.0, 2.9377695495975371145e-2, 0.0301576),
    (5, 1234.5, 1.8084932113758090729e-2, 0.0227089),
    (5, 5000.0, -9.1333370075139421366e-3, 0.0112838),
    (5, 9999.0, 7.9415663934803738047e-3, 0.00797925),
    (8, 1e-08, 9.6881200396825412772e-72, 4.10696e+69),
    (8, 0.001, 9.6881197705680991131e-32, 4.10696e+29),
    (8, 0.1, 9.6854292315946505495e-16, 4.10843e+13),
    (8, 0.5, 3.758223154797609955e-10, 1.06082e+8),
    (8, 1.0, 9.4223441726045005454e-8, 425675.0),
    (8, 2.5, 1.240773664298689009e-4, 337.96),
    (8, 7.3, 1.5525662077255553112e-1, 0.554437),
    (8, 12.0, 4.5095329080457240083e-2, 0.265266),
    (8, 19.9, -5.8074073840496930991e-2, 0.186838),
    (8, 20.1, -8.8966446291989900348e-2, 0.185732),
    (8, 33.3, -6.5952353624101138042e-2, 0.140325),
    (8, 50.0, 1.0405856317363927063e-1, 0.113568),
    (8, 99.5, 5.9984942215581394493e-3, 0.0801179),
    (8, 150.0, 1.3047482120171820168e-2, 0.0651932),
    (8, 333.0, 3.3488991066873479081e-2, 0.0437301),
    (8, 511.0, 8.1099903796417679293e-3, 0.0352985),
    (8, 700.0, -7.6298068614681062892e-3, 0.0301582),
    (8, 1234.5, -1.401828923293250226e-2, 0.0227091),
    (8, 5000.0, -6.5905055447977458009e-3, 0.0112838),
    (8, 9999.0, -7.9000228607426563642e-4, 0.00797925),
    (13, 1e-08, 1.9603324996120140306e-118, 1.24904e+116),
    (13, 0.001, 1.96033246460607683e-53, 1.24904e+51),
    (13, 0.1, 1.9599824694071794771e-27, 1.2493e+25),
    (13, 0.5, 2.3823232712155035115e-18, 1.02856e+16),
    (13, 1.0, 1.9256167644801728904e-14, 1.27536e+12),
    (13, 2.5, 2.6115447183637898425e-9, 9.55534e+6),
    (13, 7.3, 1.2245433415958724292e-3, 24.2493),
    (13, 12.0, 1.2014788292670000256e-1, 0.49478),
    (13, 19.9, -2.04928811147665718e-1, 0.205127),
    (13, 20.1, -2.0218978548685648129e-1, 0.203388),
    (13, 33.3, -7.198335007570028009e-2, 0.144081),
    (13, 50.0, 6.9118827683900344733e-2, 0.114825),
    (13, 99.5, -6.6138543581903000081e-2, 0.0803332),
    (13, 150.0, -5.5582862798638390784e-2, 0.0652697),
    (13, 333.0, -2.2518925539346865717e-2, 0.0437405),
    (13, 511.0, 3.5008360187625482275e-2, 0.035302),
    (13, 700.0, 2.8524859447023061009e-2, 0.0301598),
    (13, 1234.5, 1.7254008945151999585e-2, 0.0227094),
    (13, 5000.0, -9.2278170239906313899e-3, 0.0112838),
    (13, 9999.0, 7.9357863389734216732e-3, 0.00797925),
    (21, 1e-08, 9.333105594344744591e-195, 1.62407e+192),
    (21, 0.001, 9.3331054882867270397e-90, 1.62407e+87),
    (21, 0.1, 9.3320450718018017318e-48, 1.62427e+45),
    (21, 0.5, 4.4377456110501701752e-33, 3.41658e+30),
    (21, 1.0, 9.2276219820966702292e-27, 1.6445e+24),
    (21, 2.5, 1.9763951096255496106e-18, 7.72438e+15),
    (21, 7.3, 6.8112528502545033974e-9, 2.37389e+6),
    (21, 12.0, 7.8389272169461551082e-5, 235.942),
    (21, 19.9, 1.0582117897978460199e-1, 0.410891),
    (21, 20.1, 1.1553515434778700861e-1, 0.390747),
    (21, 33.3, 1.5593734718841720403e-1, 0.156849),
    (21, 50.0, -3.2998447123701861019e-2, 0.118439),
    (21, 99.5, 3.2002039546750945062e-2, 0.0809044),
    (21, 150.0, -7.2067010218514942598e-3, 0.06547),
    (21, 333.0, -5.7699086732744194973e-3, 0.0437674),
    (21, 511.0, 3.4979816480164283545e-2, 0.0353112),
    (21, 700.0, 2.6100393617094570258e-2, 0.030164),
    (21, 1234.5, 1.5526683701155060664e-2, 0.0227105),
    (21, 5000.0, -9.4010440712711828738e-3, 0.0112838),
    (21, 9999.0, 7.9237460432215504014e-3, 0.00797925),
    (40, 0.001, 1.1146925604908663666e-180, 7.13896e+177),
    (40, 0.1, 1.114624600251642287e-100, 7.13942e+97),
    (40, 0.5, 1.0122626959003594127e-72, 7.86196e+69),
    (40, 1.0, 1.1079158511286326622e-60, 7.18487e+57),
    (40, 2.5, 8.8755868405815496357e-45, 8.98346e+41),
    (40, 7.3, 2.7440929135097691845e-26, 2.94952e+23),
    (40, 12.0, 6.7448821484690061239e-18, 1.23683e+15),
    (40, 19.9, 8.3161064015974544128e-10, 1.10332e+7),
    (40, 20.1, 1.1777722204633169495e-9, 7.81651e+6),
    (40, 33.3, 5.0136508283199526562e-3, 2.89644),
    (40, 50.0, -1.3817628120116143097e-1, 0.145415),
    (40, 99.5, 8.3474575521680609575e-2, 0.083591),
    (40, 150.0, -5.3178029743433989334e-2, 0.0663593),
    (40, 333.0, -1.7504881601219674717e-3, 0.0438829),
    (40, 511.0, -3.3783296308071242788e-2, 0.0353506),
    (40, 700.0, -2.9470316117697007098e-2, 0.0301819),
    (40, 1234.5, -2.1809201281759841245e-2, 0.0227148),
    (40, 5000.0, -5.1116691093590206029e-3, 0.011284),
    (40, 9999.0, -1.3969360779651271844e-3, 0.00797928),
    (80, 0.1, 1.1557375405848065236e-223, 3.44272e+220),
    (80, 0.5, 9.5529579464319759009e-168, 4.16515e+164),
    (80, 1.0, 1.152211443133204236e-143, 3.45352e+140),
    (80, 2.5, 7.7570169114479996292e-112, 5.13189e+108),
    (80, 7.3, 1.1407720902817193837e-74, 3.50249e+71),
    (80, 12.0, 1.5989161066097691873e-57, 2.51696e+54),
    (80, 19.9, 2.7306436986329200794e-40, 1.50442e+37),
    (80, 20.1, 5.9267110929164071028e-40, 6.93599e+36),
    (80, 33.3, 2.1835857724986300318e-23, 2.00409e+20),
    (80, 50.0, 2.8051557721833452316e-11, 1.81729e+8),
    (80, 99.5, 4.2902144496516628643e-2, 0.103681),
    (80, 150.0, 8.1389599136467573197e-3, 0.0708315),
    (80, 333.0, -3.7534327977421474107e-2, 0.0443784),
    (80, 511.0, 1.0581539585016996393e-2, 0.035516),
    (80, 700.0, 3.0173481306664106119e-2, 0.0302565),
    (80, 1234.5, 2.0622313430473707815e-3, 0.0227327),
    (80, 5000.0, 1.1151501220819459089e-4, 0.0112845),
    (80, 9999.0, -3.2245248520104426634e-3, 0.00797937),
    (150, 2.5, 5.9581913416462732885e-249, 3.56209e+245),
    (150, 7.3, 3.5375939927611111291e-179, 6.00573e+175),
    (150, 12.0, 7.2806871528157588163e-147, 2.92402e+143),
    (150, 19.9, 4.2776745701554084707e-114, 5.00504e+110),
    (150, 20.1, 1.8918093463923143141e-113, 1.13192e+110),
    (150, 33.3, 4.4980307427134297281e-81, 4.83851e+77),
    (150, 50.0, 1.2915954231385293086e-55, 1.74265e+52),
    (150, 99.5, 1.5499270147458663104e-16, 1.82972e+13),
    (150, 150.0, 8.4185057883402849681e-2, 0.168374),
    (150, 333.0, 2.6577497080436431546e-2, 0.0462743),
    (150, 511.0, 3.8789573982546218892e-3, 0.0361005),
    (150, 700.0, -1.8121320888412777165e-2, 0.0305137),
    (150, 1234.5, -7.5769352898282400059e-3, 0.0227934),
    (150, 5000.0, -1.1272651801697865826e-2, 0.0112863),
    (150, 9999.0, 7.4967448665477101089e-3, 0.00797969),
    (300, 33.3, 3.4503926734819926178e-249, 3.09423e+245),
    (300, 50.0, 9.8015896382595329154e-197, 1.09787e+193),
    (300, 99.5, 8.5218756012805484244e-110, 1.31977e+106),
    (300, 150.0, 4.386129482356853121e-61, 2.7933e+57),
    (300, 333.0, -6.17680666354091179e-2, 0.0663449),
    (300, 511.0, -1.8723584890915749632e-2, 0.0392296),
    (300, 700.0, -1.3359481663724138407e-2, 0.0317267),
    (300, 1234.5, 9.508602101627139951e-3, 0.023057),
    (300, 5000.0, 9.8090280321654709023e-3, 0.011294),
    (300, 9999.0, 7.9277444256411292397e-3, 0.00798104),
    (512, 150.0, 4.7405646858015796173e-212, 1.37163e+208),
    (512, 333.0, 7.993203064084100587e-55, 1.02394e+51),
    (512, 511.0, 4.9543674908319845891e-2, 0.118894),
    (512, 700.0, -1.1348274232665064835e-2, 0.0365194),
    (512, 1234.5, -2.3790955455090599533e-2, 0.0238061),
    (512, 5000.0, 5.1691555896183591086e-3, 0.0113136),
    (512, 9999.0, -4.7745447009660636838e-3, 0.00798448),
    (331, 4866.224754497574, -9.3089612555716357334e-3, 0.0114511),
    (404, 80.46496713540195, 1.9018791416757748787e-233, 4.22742e+229),
    (74, 846.5366241316345, -1.9963093567046248392e-2, 0.0274758),
    (96, 1.563628225754645, 5.4806133931186146538e-161, 6.05072e+157),
    (59, 2872.264158087459, -9.2345952729467576011e-3, 0.0148893),
    (126, 4838.360280436556, -4.5509585197685492226e-3, 0.0114727),
    (63, 29.01467375794893, 2.605207716175160023e-16, 2.18504e+13),
    (147, 17.543462512844105, 1.4791347530024049401e-118, 1.47448e+115),
    (64, 24.33379016909598, 2.193406540145869484e-21, 2.45171e+18),
    (210, 9.516712964838725, 1.565911194703376327e-256, 9.6897e+252),
    (437, 460.65166993203434, -2.8440522511090590944e-2, 0.0660147),
    (254, 583.8172046036825, 3.5891801281150732622e-3, 0.0348004),
    (351, 238.05194632289545, 1.7477844577158803592e-33, 7.06077e+29),
    (294, 45.0561536566011, 2.0259268744292794856e-203, 5.40804e+199),
    (74, 0.05109691374518739, 4.2211581692849396483e-226, 1.01903e+223),
    (79, 386.7454360032302, 4.0078552304756975292e-2, 0.0410067),
    (95, 4656.789109747588, -1.0587729632418734392e-2, 0.0116934),
    (485, 152.14315113363332, 2.899492596388535687e-187, 2.38386e+183),
    (66, 0.023121529824828627, 2.6377799257271466402e-221, 1.82839e+218),
    (317, 76.34368645486559, 3.9253252204063894121e-158, 2.63566e+154),
    (395, 2100.1086002244797, -5.1533766802959139527e-3, 0.0175683),
    (119, 9.165538105916784, 7.1113655888585173168e-119, 3.77261e+115),
    (223, 406.81591150237676, 2.9261807284206096148e-2, 0.0432553),
    (132, 269.2652303904559, 5.1992592607302659509e-2, 0.0520823),
    (284, 1996.654671743908, 1.2488407154920570919e-2, 0.0179477),
    (440, 1527.238340283452, 1.6746148842678352864e-2, 0.0208639),
    (285, 173.13316047909325, 4.8522020157156365794e-38, 2.8978e+34),
    (367, 124.83557222123669, 4.8286393988882261897e-130, 1.91012e+126),
    (389, 5576.827660417032, -7.0645976902365264764e-3, 0.0106973),
    (4, 0.07482700363864717, 8.1616996608291237369e-8, 975193.0),
    (326, 5231.034124576942, -1.0742437532395170262e-2, 0.0110425),
    (55, 5.493667027874693, 9.4083686217457062316e-50, 6.18232e+46),
    (68, 8091.063405712639, -5.0680382867999769815e-3, 0.00887044),
    (348, 40.212730474718875, 1.1248570120445191337e-282, 8.18639e+278),
    (154, 16.584872144103276, 6.2255255077535936853e-131, 3.33954e+127),
    (372, 48.130855140528794, 6.8203283962961842979e-284, 1.26523e+280),
    (72, 1761.9527760265075, -1.8617551709449878043e-2, 0.0190162),
    (258, 5405.154889104299, -8.2663963909397901106e-3, 0.0108588),
    (118, 1240.5708119616534, -5.3969859167625674364e-3, 0.0227047),
    (104, 314.80637802956926, -3.5660710130706378555e-3, 0.0462877),
    (165, 12.531617016494494, 4.6145026241751468516e-165, 4.19274e+161),
    (210, 5080.581672783536, -5.6689411451880440648e-3, 0.0111987),
    (27, 353.88141669479637, -3.2569640464971181638e-2, 0.0424761),
    (305, 7430.318947510234, 3.2237300273803089014e-3, 0.00926018),
    (93, 150.37675726952452, -2.3147202719566649581e-2, 0.0733962),
    (228, 15.687523339476401, 4.6408000050439872999e-237, 3.01546e+233),
    (337, 65.86452316494575, 8.3411249220605521587e-198, 1.15466e+194),
    (199, 686.2328575816849, 3.0490907422752769215e-2, 0.0311345),
    (410, 274.9401227668491, 3.0468153624331926101e-40, 3.43493e+36),
    (29, 8662.066632976397, 3.5293897222613146169e-4, 0.00857295),
    (198, 142.9327173067735, 6.1728473507661174584e-16, 3.76368e+12),
    (357, 5370.36480396263, 1.0719410625767079457e-3, 0.0108998),
    (104, 0.22965450036901014, 1.7053991037714014974e-264, 1.7947e+261),
    (1, 7.530790352472077, 1.4281415478953419001e-1, 0.291695),
    (352, 627.8594989133949, 3.4035637410389988304e-2, 0.0349926),
    (86, 1018.3401026277977, 2.4684545643949164612e-2, 0.0250479),
    (122, 2875.165346064288, -1.1091302567924654457e-2, 0.0148869),
    (204, 7.382381211857698, 3.5524574096090773018e-269, 4.39517e+265),
    (182, 4.013751256116874, 1.6921676576830712648e-279, 1.03381e+276),
    (86, 223.25027051737257, -4.925425950877532547e-2, 0.0555882),
    (174, 9092.307990948715, -1.2702665616914757522e-3, 0.00836841),
    (28, 0.08070569880606972, 3.022126071619791567e-69, 3.76168e+66),
    (476, 690.2587047883643, 3.1280769041704332266e-2, 0.0356866),
    (149, 46.71324350437281, 5.1660569437509383033e-59, 4.35484e+55),
];

/// mpmath reference values of K1.
pub const K1_TABLE: &[(f64, f64)] = &[
    (1e-06, 999999.99999278432422),
    (0.001, 999.99623815608555346),
    (0.05, 19.909674325882505397),
    (0.3, 3.0559920334573251072),
    (1.0, 0.60190723019723457474),
    (1.7, 0.20936248820408248749),
    (2.0, 0.13986588181652242728),
    (2.3, 0.094982443845362658227),
    (5.0, 0.0040446134454521642084),
    (10.0, 0.000018648773453825584597),
    (37.5, 1.0697630152680756963e-17),
    (100.0, 4.6798537356369092866e-45),
    (250.0, 2.1189445978139999302e-110),
    (500.0, 3.9963119385460033495e-219),
    (699.0, 1.2711925074280124243e-305),
    (700.0, 4.6731107967079661091e-306),
];
