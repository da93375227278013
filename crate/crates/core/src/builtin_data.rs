//! Embedded point sets for the built-in design catalogue.
//!
//! Coordinates are unit vectors; the first point of every set is the
//! north pole (0, 0, 1). Sets were produced by minimizing the summed
//! degree-residuals of the equal-weight rule and are exact designs to
//! machine precision at their stated strengths.

/// (name, strength, points) for each embedded design.
pub(crate) const BUILTIN_DESIGNS: &[(&str, u32, &[[f64; 3]])] = &[
    ("pole", 0, &[
        [0.0, 0.0, 1.0],
    ]),
    ("antipodal", 1, &[
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ]),
    ("tetrahedron", 2, &[
        [0.0, 0.0, 1.0],
        [0.9428090415820635, 0.0, -0.3333333333333333],
        [-0.4714045207910315, 0.8164965809277261, -0.3333333333333333],
        [-0.4714045207910322, -0.8164965809277258, -0.3333333333333333],
    ]),
    ("antiprism-8", 3, &[
        [0.0, 0.0, 1.0],
        [-0.47140452079103173, 0.8164965809277259, 0.33333333333333354],
        [-0.9428090415820636, 9.999199243478974e-17, -0.33333333333333315],
        [-0.47140452079103184, -0.8164965809277259, 0.33333333333333337],
        [0.8047378541243652, 0.5773502691896256, 0.1380711874576982],
        [0.13807118745769836, 0.5773502691896257, -0.804737854124365],
        [0.13807118745769825, -0.5773502691896256, -0.8047378541243653],
        [0.804737854124365, -0.5773502691896258, 0.13807118745769797],
    ]),
    ("design-16-t4", 4, &[
        [0.0, 0.0, 1.0],
        [-0.7017836752304428, -0.44013372707196535, 0.5601624545377826],
        [0.03012753360115764, 0.7478915717097971, 0.6631368853295379],
        [0.4558013071113284, -0.5404320747866668, 0.7072328760580796],
        [-0.8196806382895226, 0.34134619276496037, 0.46000698679275226],
        [0.7984918834176714, 0.4528366810792453, 0.3966732312435941],
        [-0.057813944989075675, -0.9782555058280934, 0.1991826123983245],
        [-0.43675682433657553, 0.8929452891887133, -0.10905130403216041],
        [0.9571507612082295, -0.2803590402269062, 0.07253432898672597],
        [-0.8044538859064088, -0.5347438605740451, -0.2586560438660665],
        [0.4769606316734445, 0.84140859537673, -0.2540474984325318],
        [0.29331170724890815, -0.839307734324373, -0.4577453107285955],
        [-0.795725167192986, 0.29109766804467446, -0.5311154356207763],
        [0.73882760135061, -0.07722066051982136, -0.6694555586978023],
        [-0.24571521516970576, -0.3490724122787609, -0.904307737454453],
        [0.11125792410316904, 0.4719990205827332, -0.8745505124880975],
    ]),
    ("design-32-t7", 7, &[
        [0.0, 0.0, 1.0],
        [-0.6693005033357974, -0.3297557856019011, 0.6658062466637882],
        [-0.008191898601867748, 0.6190159848711495, 0.7853356628036812],
        [0.5904848442895885, 0.26133744087721356, 0.7635642675374807],
        [-0.5381131641860769, 0.2715417243892218, 0.797934404851286],
        [0.5077486483720186, 0.7605615091624124, 0.4046449071185523],
        [-0.3567221161404843, -0.9070202867862732, 0.22374881276646266],
        [-0.133921505316549, 0.9546089651490648, 0.2660578021234878],
        [0.46681296984330783, -0.377796900374067, 0.7995968692121163],
        [-0.17008640965244615, -0.5944774340248835, 0.7859180578703675],
        [0.35672103437629976, 0.9070203013921533, -0.22375047820281965],
        [0.2534907773786542, -0.8950762824890115, 0.3668526602188092],
        [-0.9549069115205712, 0.12840118209951434, 0.26770492480657004],
        [0.9404059041078139, 0.058336281326625834, 0.3350128561714401],
        [-0.8417924582884736, -0.5324221216858186, 0.088950219270218],
        [-0.2534911581548253, 0.8950762812817716, -0.3668524000522827],
        [0.7735909755926945, -0.5604592810761622, 0.2957066058395287],
        [-0.7735909328294431, 0.5604591788841706, -0.29570691139801397],
        [0.8417919615297885, 0.5324229442500094, -0.08894999685206466],
        [0.13392214282480622, -0.9546090899432897, -0.26605703346999904],
        [-0.6555153823149286, 0.6871616225325701, 0.31322274513023285],
        [0.9549073306822256, -0.1283998810064345, -0.2677040536990059],
        [-0.5077488498143827, -0.7605609037302231, -0.40464579230388337],
        [0.17008558335447388, 0.5944761440058643, -0.7859192124785391],
        [0.6555160072304517, -0.6871610045085677, -0.3132227931479813],
        [-0.4668126310277828, 0.3777966686834045, -0.799597176486161],
        [0.6693003426786951, 0.32975628218244235, -0.6658061622209537],
        [0.008192388935456882, -0.6190170058468275, -0.7853348529359684],
        [-0.5904852323838107, -0.26133687374189324, -0.7635641615211198],
        [0.5381141027152964, -0.2715414199337486, -0.797933875530595],
        [-0.9404061913505029, -0.058335955768488865, -0.33501210654873087],
        [2.841202931207234e-07, -2.277302370905175e-06, -0.9999999999973664],
    ]),
    ("design-64-t9", 9, &[
        [0.0, 0.0, 1.0],
        [-0.3053049399849979, -0.3153216085658753, 0.8985327911613387],
        [0.06777540394388716, 0.3671427798086999, 0.9276921223415576],
        [0.23951736461123416, -0.3516181133132356, 0.9049840520361283],
        [-0.4611005673599867, 0.14509130328832912, 0.8754054948938763],
        [0.5085031036637162, 0.2635177804052923, 0.8197456757889218],
        [-0.12570196940559744, -0.6662894532050618, 0.735022026496658],
        [-0.2990794167282095, 0.5652655464573971, 0.7687823908478486],
        [0.5515529131350937, -0.16282059230122944, 0.8180946392287807],
        [-0.6834519916575504, -0.20584966328829274, 0.7003708240806611],
        [0.3412587472887614, 0.6515597727074156, 0.6775044870614261],
        [0.2947946633180349, -0.7201929785506233, 0.6280272128861838],
        [-0.7043567652883295, 0.3804026300442821, 0.5993124279104798],
        [0.8116438602212408, 0.2084078939261613, 0.5457109069044017],
        [-0.5149617564205327, -0.6634351464198542, 0.5428334882071538],
        [-0.07933571242462356, 0.8273085492378177, 0.5561172619979483],
        [0.7088204939751999, -0.4774332547455325, 0.5192600452411502],
        [-0.9081084360439767, -0.035296412215478044, 0.4172448102379194],
        [0.635541184896307, 0.6685946497426551, 0.3860940256415456],
        [-0.05701107526711183, -0.9331674576873642, 0.3548918612904343],
        [-0.5828099282313559, 0.7250747241209169, 0.3668776798824615],
        [0.9129919858003209, -0.17187904073071533, 0.37000436378761203],
        [-0.7818713827108654, -0.5453865584130185, 0.3020441073754006],
        [0.1875525318493187, 0.9417998065915316, 0.27899313988172575],
        [0.5245165806050761, -0.801483221991969, 0.2872403201776013],
        [-0.9255084585759623, 0.32889757872618963, 0.18777772980946464],
        [0.9060012832499479, 0.3940649669268392, 0.1545136776806397],
        [-0.3969548235799429, -0.908765938548971, 0.12872970507938097],
        [-0.3499175650266791, 0.9271382227873359, 0.1340612305349326],
        [0.8882874613275824, -0.45899891354541394, 0.01629059275558168],
        [-0.95931707047959, -0.28104918567678705, 0.026872169932335467],
        [0.5580612698278539, 0.8297189632797793, 0.011578475376820756],
        [0.20495111293250823, -0.9784002415703633, 0.02698163454612801],
        [-0.7824458491873034, 0.6193512747216039, -0.06467218560002473],
        [0.9974428011198431, 0.05675315667168771, -0.0434388961876326],
        [-0.6573796664464832, -0.7403913808105793, -0.1402589653609148],
        [-0.007260939393885231, 0.99268664940399, -0.12050101598823892],
        [0.6586787709679227, -0.7381563385622572, -0.1458337975798107],
        [-0.9791085787497865, 0.07604863936385745, -0.18858153533545965],
        [0.7777109753524682, 0.5685684585666422, -0.26813344949756845],
        [-0.1467847094603722, -0.9541548133950787, -0.26085022741726044],
        [-0.48744154807295753, 0.8190575434237609, -0.30256483234651155],
        [0.9066781414010833, -0.2201830625540759, -0.3597973969747213],
        [-0.8131631341275888, -0.4460909186519125, -0.37385640236873],
        [0.30757381034597986, 0.8852242894914402, -0.34896462354174274],
        [0.3207231483830803, -0.859330255230257, -0.3983568432161622],
        [-0.8011424471371492, 0.386064745402778, -0.45730164197407824],
        [0.8410499804159035, 0.24820089339143872, -0.4806570991487591],
        [-0.4054627952773436, -0.7387246539406364, -0.5384104450195686],
        [-0.164371708827601, 0.8126433569591893, -0.5590999156923511],
        [0.6371727662765537, -0.5191508039727156, -0.5696431414929587],
        [-0.8026515948329529, -0.06506921985833623, -0.5928881968290014],
        [0.4859215229043206, 0.60716272299875, -0.6286761498411474],
        [0.015553223337632817, -0.7324909448627064, -0.6805990838503602],
        [-0.5030190141380653, 0.50921334326908, -0.6983363390604093],
        [0.660289406103976, -0.06991629657465157, -0.7477496985356422],
        [-0.5054027831044408, -0.38379235728495925, -0.7728333929896791],
        [0.08227234019438931, 0.6005135795769806, -0.795370795781804],
        [0.33914438363341864, -0.45654749938021644, -0.8225238402986139],
        [-0.48251316038208397, 0.07915729588644364, -0.8723045182538257],
        [0.4344824665836749, 0.23844062125274362, -0.86854536805395],
        [-0.1348478117190736, -0.34542636302859014, -0.9287070019114844],
        [-0.14355750584700208, 0.2768999149572023, -0.9501145613091517],
        [0.14488133407755666, -0.05315898637491883, -0.9880200004066205],
    ]),
    ("design-128-t12", 12, &[
        [0.0, 0.0, 1.0],
        [-0.19771028585543898, -0.18176456432524313, 0.9632612760941941],
        [0.0332962206172196, 0.27560460110381624, 0.9606942622619413],
        [0.2166086161025763, -0.23719709142339573, 0.947004882379393],
        [-0.3689691892949073, 0.09830589578377086, 0.9242281580893374],
        [0.3313804516711547, 0.1848552115324149, 0.9252110824128338],
        [-0.09432412065626168, -0.45772065408563894, 0.8840784824244043],
        [-0.20809852393929945, 0.4215276280477484, 0.8826151274064612],
        [0.4374037234174025, -0.14180874923159978, 0.8880136605829676],
        [-0.5038762985791696, -0.20045173082893797, 0.8401950840952583],
        [0.24611181216281883, 0.4985782428203756, 0.831173093705565],
        [0.1963287032175926, -0.5301729895823015, 0.8248464350473141],
        [-0.5007419970170297, 0.2999731478646044, 0.8119566262945312],
        [0.5906477944263109, 0.13744087408225814, 0.7951384716329849],
        [-0.362498357367239, -0.5164591152234007, 0.7757995380307436],
        [-0.08436169395710162, 0.6428651399629003, 0.7613195888804969],
        [0.5210588412304298, -0.43439105427605007, 0.7347122538385649],
        [-0.6929910422171237, -0.026295051453282363, 0.7204665055891868],
        [0.5045939534712877, 0.48330605010772165, 0.7154021275125537],
        [-0.03459644238342519, -0.7255504588124305, 0.6872987835661298],
        [-0.4700691445654235, 0.5828321410494302, 0.6628285560288333],
        [0.7381596894577139, -0.10218385310366818, 0.6668423599506702],
        [-0.6191236464572989, -0.44038286425081485, 0.6501913897243381],
        [0.1731530493792973, 0.7488579939518688, 0.6397106583331511],
        [0.38953320794209584, -0.6829740005938236, 0.6179080792668176],
        [-0.7579669624590484, 0.24951942585573844, 0.6026824536530212],
        [0.7404360064825468, 0.33651871351921836, 0.5818158435068161],
        [-0.3219605933172549, -0.7615800844141315, 0.5624385756458796],
        [-0.27139959538498626, 0.7879518228683542, 0.5526971905693964],
        [0.738699292307759, -0.3695405078834094, 0.5637048594586422],
        [-0.8306274911930301, -0.21609360671011899, 0.5131876109313096],
        [0.46077488420794604, 0.7267409553935075, 0.5094448840030547],
        [0.1593388111118192, -0.8553849587024281, 0.4928769782604144],
        [-0.6980677028007152, 0.5261856080859004, 0.48562350452774],
        [0.8802952351356021, 0.06972808926696081, 0.4692742189431822],
        [-0.6086061944586633, -0.6592074522238799, 0.44163790031998507],
        [0.006931289115854907, 0.9027819665667047, 0.4300426468074365],
        [0.6230689213689883, -0.6684153588702215, 0.40620933919652613],
        [-0.911443731027147, 0.08839355138446917, 0.401817004673713],
        [0.7309529197572299, 0.5619119608724558, 0.3872502773747906],
        [-0.1612457088961131, -0.914136906341221, 0.37195905396628237],
        [-0.504793106844052, 0.7898163416014095, 0.3483878095199299],
        [0.9125575857809368, -0.2546392478860107, 0.31999610321020294],
        [-0.8422220622807771, -0.43065132572884646, 0.3243477045633307],
        [0.33433545550676386, 0.8923595020131702, 0.3031737494538271],
        [0.3637794836093002, -0.8850368607411064, 0.29047244694545127],
        [-0.8711151017648121, 0.4157659579464107, 0.2613372298203692],
        [0.9238765316896038, 0.28299000357532506, 0.2576214511053496],
        [-0.4894907527996309, -0.8400684879717001, 0.23384554398275847],
        [-0.19875826524031787, 0.9540304214604278, 0.22432366555202715],
        [0.7930679793988943, -0.5661103567913035, 0.2248604989449642],
        [-0.974182060440002, -0.1223914683862518, 0.18970936082104453],
        [0.6419239227111245, 0.7443778685926609, 0.18394364952509076],
        [0.032677785345211395, -0.986293690892379, 0.16173100398754878],
        [-0.6915302127187462, 0.7070872069873751, 0.1476944366317114],
        [0.9887554765279613, -0.04559122112108883, 0.14242207761668108],
        [-0.7664744886392187, -0.6307998631987166, 0.12086517634839575],
        [0.14224277498809282, 0.9843196446985609, 0.104316010392391],
        [0.5700315709829272, -0.8174146508822184, 0.08304996451436181],
        [-0.9724118647366364, 0.22173394175517716, 0.07245153133736382],
        [0.8708524950886743, 0.48832117238046646, 0.05619932742299458],
        [-0.3048781394111876, -0.9516752376253399, 0.03692644309875013],
        [-0.4103412615648601, 0.9114446802442664, 0.029810131025975708],
        [0.9208709085954105, -0.3896516262298204, 0.012976127277395534],
        [-0.9412044074720359, -0.3374444262140576, -0.016294863370996407],
        [0.46819334421788644, 0.8832468807791385, -0.025883199647533054],
        [0.25212652508658057, -0.9671334698122802, -0.03294035392379951],
        [-0.8355240533401196, 0.5466879792986576, -0.05506187047719594],
        [0.9834620450514915, 0.16638755020697432, -0.07153732647548156],
        [-0.6133978435356991, -0.7848837563777465, -0.08775291744501831],
        [-0.07843498143191421, 0.9914610510547802, -0.1041774348365589],
        [0.7269419230606189, -0.6750284691771538, -0.12606350105116665],
        [-0.9916288465168689, 0.00993314652581871, -0.128738352310881],
        [0.7360416568671146, 0.6614045148841725, -0.1441760973502367],
        [-0.08915667382625593, -0.9823270223365693, -0.16457432576075687],
        [-0.5869677191569534, 0.7894100540646278, -0.17972385264445356],
        [0.963141914840945, -0.17854124807588875, -0.201198097933409],
        [-0.8303545779197167, -0.5164517385543164, -0.2092579190185957],
        [0.2616590383775514, 0.9374291666352167, -0.22969785627414632],
        [0.4347604610953404, -0.8692458240539243, -0.23536150669338732],
        [-0.9021563549191157, 0.34176397666713126, -0.263270384836052],
        [0.8894853661175692, 0.3629316873095222, -0.27766233775821514],
        [-0.41415216937258403, -0.8628920748595571, -0.2896467637460342],
        [-0.27368729299623434, 0.9107459977391328, -0.3092523132565787],
        [0.8191044918908932, -0.48195220761603697, -0.31111075349172695],
        [-0.9210324240656197, -0.1885930544330343, -0.3407813575291746],
        [0.5507558531060003, 0.760396248390355, -0.3441882271422938],
        [0.10931206942411849, -0.9201698314098014, -0.3759499339559387],
        [-0.7029137984459917, 0.5998270239655978, -0.38225610953234246],
        [0.9221097889831726, 0.02330398081384493, -0.3862259203363188],
        [-0.6504870849165647, -0.6371462193074748, -0.41341413567866914],
        [0.05520299548960008, 0.9027939321765899, -0.42651582070786814],
        [0.5700855867124741, -0.6905005431140728, -0.4452094156482597],
        [-0.8787018259813241, 0.13359315883442902, -0.45829681313503134],
        [0.7269491220065608, 0.4900594132512763, -0.4810267617271467],
        [-0.19902722065082937, -0.8483484872640872, -0.490604738661115],
        [-0.4266964235543518, 0.7531651894193, -0.5006719081124035],
        [0.8036165510670561, -0.2699871748044622, -0.5303841667057893],
        [-0.7645177527573706, -0.3506371843943417, -0.5408938626374202],
        [0.3322284859089105, 0.7586163060608323, -0.5604690297681848],
        [0.28229467832001437, -0.7762818176453604, -0.5636455040053232],
        [-0.707714105183824, 0.38207610879905723, -0.5942714803932881],
        [0.7734512836252266, 0.1973430374047923, -0.6023527516715933],
        [-0.42837040086198097, -0.6573893174086828, -0.6199500665555994],
        [-0.11967097291576431, 0.7638362770565941, -0.6342184167096666],
        [0.5961830143175448, -0.4687483626786051, -0.6517981174607467],
        [-0.7518761128451473, -0.0590790730183936, -0.6566520951494472],
        [0.498347970387438, 0.5431537832296575, -0.6757464525796875],
        [-0.010935320612074428, -0.7186201208180076, -0.6953168635367787],
        [-0.4645622436833125, 0.5276171429847395, -0.7111976322883446],
        [0.6888003865522581, -0.06298135305385687, -0.7222100640762111],
        [-0.5363997403140168, -0.40141369693609985, -0.74238962984618],
        [0.12408366099691842, 0.6394669964514322, -0.7587392210258976],
        [0.32457283490829025, -0.5422453036883824, -0.7749983906225157],
        [-0.5847367316966353, 0.1677762148235456, -0.7936838768327227],
        [0.5351394244511515, 0.2570311497046309, -0.8047116157230526],
        [-0.2021704284630149, -0.5321972838258098, -0.8221272218723277],
        [-0.19984451877398812, 0.5218804848806697, -0.8292785586379947],
        [0.4773131614002409, -0.23106079004594865, -0.8478107437733078],
        [-0.4823399811141323, -0.13122002794916499, -0.8661001367531579],
        [0.24743881911509685, 0.3854943532164937, -0.8889140197078251],
        [0.09993960176826236, -0.4287972956352411, -0.8978557541466807],
        [-0.3358794003584935, 0.22718137379033812, -0.9140971785415124],
        [0.3482832442471749, 0.05397734745350751, -0.935833974451957],
        [-0.2255838454732182, -0.2483497935633314, -0.9420373181029327],
        [0.005279398253305546, 0.28709290615462435, -0.9578881934702896],
        [0.16240845945331675, -0.14625410345937426, -0.9758243845689116],
        [-0.10745733996489568, 0.014745988760702844, -0.9941003349275855],
    ]),
    ("design-256-t15", 15, &[
        [0.0, 0.0, 1.0],
        [-0.11651407909526731, -0.11209467634220764, 0.9868430741046509],
        [0.02698486924486652, 0.19954050697696482, 0.9795179441476372],
        [0.1660005456932117, -0.17559283766983796, 0.9703664123353661],
        [-0.27642605212636534, 0.06436413719510396, 0.9588774142448876],
        [0.24304805809763932, 0.13421510283137167, 0.9606841039732733],
        [-0.08042194621311176, -0.32323023238506127, 0.942896880597022],
        [-0.14853386258668902, 0.29919982101756415, 0.9425588357063638],
        [0.3193807628946465, -0.10475990035515023, 0.9418180777466595],
        [-0.35650538282473077, -0.1504444459943728, 0.9221010685854552],
        [0.1719354249508649, 0.35635658007292687, 0.9183943583699179],
        [0.1322998337895444, -0.388702433125887, 0.911815317079766],
        [-0.365239191618723, 0.2184449288384771, 0.904921071679986],
        [0.4260792875842047, 0.09624704951577372, 0.8995515250119055],
        [-0.26646071480804734, -0.37734791643206084, 0.8869088100973894],
        [-0.06066529033579517, 0.4716075588287246, 0.8797192921631788],
        [0.3798268668988894, -0.3155189290018053, 0.8695857385119234],
        [-0.505641440492415, -0.020779420964840728, 0.8624934488569298],
        [0.3706223567230973, 0.36476513348426465, 0.854157752462169],
        [-0.020063602560778618, -0.5302730564618793, 0.847589486392357],
        [-0.346269680025805, 0.4201363726702152, 0.8387983888005156],
        [0.5529070863218, -0.07475537390630191, 0.8298827555548233],
        [-0.4611379746479797, -0.3219999701754955, 0.8268420571938386],
        [0.12807672867692058, 0.56469538509302, 0.8153008485375592],
        [0.2925226380713083, -0.5099868604595801, 0.8089152664985272],
        [-0.5747309411056134, 0.18547917451825974, 0.7970456832301902],
        [0.5518692486193039, 0.25211594525868997, 0.7949074679323891],
        [-0.24083182832252373, -0.5745630947427727, 0.7822258501394836],
        [-0.21026011457228372, 0.5936586246264588, 0.7767625902595152],
        [0.5643265088066622, -0.2929216558188224, 0.7718370909786879],
        [-0.6324778761098632, -0.16712025538637437, 0.7563349499204367],
        [0.3540153540636804, 0.5486479940477379, 0.7574024740615521],
        [0.11584114136865437, -0.6593406672610226, 0.7428665522569964],
        [-0.5345850498023289, 0.4144049255215406, 0.7365374275835057],
        [0.6775704152417419, 0.05872319107698545, 0.7331097593258935],
        [-0.47155235799228123, -0.5107382749845224, 0.7188774500133898],
        [0.005300400280568336, 0.69678624179435, 0.7172592550835238],
        [0.4765369960202909, -0.5210550380856787, 0.7081060222237127],
        [-0.7096709636863364, 0.06750736920323282, 0.7012915787343843],
        [0.5753209223938364, 0.4365051254763072, 0.6917146172294022],
        [-0.12927270516516498, -0.7178455663734058, 0.6840952496087987],
        [-0.3918259848192697, 0.6238618275345191, 0.6762165465039283],
        [0.7134324338129887, -0.19628549555455768, 0.6726709200036649],
        [-0.6679655133848333, -0.3442341542452709, 0.6597915731347127],
        [0.2651873990065709, 0.7102359136996591, 0.6521047387493363],
        [0.290821342615354, -0.7062891590363435, 0.6454289817688216],
        [-0.6948083324991666, 0.3307419654409819, 0.6386322364130735],
        [0.7418546761535059, 0.2277396297228411, 0.6307030208607536],
        [-0.3943118157927347, -0.6764816656092109, 0.6220054244303859],
        [-0.16497594859383355, 0.7733864890248628, 0.6120917210511515],
        [0.6493826097782672, -0.45980529807404863, 0.6057072840742481],
        [-0.7952597432974184, -0.09755098395478763, 0.5983692390322024],
        [0.5237737403205862, 0.6156655379148233, 0.5887418911328075],
        [0.028852390933735015, -0.8111944004589613, 0.5840643664883461],
        [-0.5726890006402926, 0.5843576729193594, 0.5749377519748498],
        [0.8247957013590864, -0.041644087942458136, 0.5638952216139216],
        [-0.639573133279395, -0.5259469421618228, 0.5606478584796389],
        [0.11550419679284119, 0.827590900130831, 0.5493196542486726],
        [0.47737308166488457, -0.6917823897989437, 0.5418044537153915],
        [-0.8257576325465616, 0.18928534900695415, 0.5313147738793016],
        [0.7395509568497495, 0.4178072521222403, 0.5277323964820452],
        [-0.26293200157550817, -0.8142618784258383, 0.5175368159753684],
        [-0.3557527964630324, 0.7819066978803738, 0.5119197824059374],
        [0.7977704115851849, -0.3361538360461733, 0.500562652332999],
        [-0.8198788547002315, -0.29014386815192605, 0.49357390468831996],
        [0.41018666785938834, 0.7693465811956777, 0.4897476243055547],
        [0.22002018038800897, -0.8499873687690017, 0.4786570726054062],
        [-0.7400539103460514, 0.4812502780399705, 0.4698067471503254],
        [0.8723100078333844, 0.14591522867254964, 0.46667332929486993],
        [-0.5491146564900954, -0.7014057395984926, 0.4544261023379448],
        [-0.06835048374018923, 0.8900950614443357, 0.45062067525235316],
        [0.6558561449839988, -0.6112949092266733, 0.4429122385307061],
        [-0.9015811135354828, 0.008467584859463619, 0.4325272196322064],
        [0.6726139384139557, 0.6031659226516963, 0.42869728201027274],
        [-0.08619191189178205, -0.9055509603556643, 0.41538947088650835],
        [-0.5480781497189902, 0.7298861386824933, 0.40850528314792733],
        [0.8976107584805503, -0.16747787944202122, 0.40773286126773634],
        [-0.7801631279974414, -0.4876897447455409, 0.3917961288518267],
        [0.24892415338806614, 0.8871920409828435, 0.38849330531777615],
        [0.41919105137135076, -0.8245780808529694, 0.37993400877917655],
        [-0.8677806440149448, 0.3285012387897948, 0.3728856258782011],
        [0.8642535897025541, 0.3476465776328847, 0.36360361624493204],
        [-0.40442602733179606, -0.8424100493451467, 0.356068669190268],
        [-0.2709256155849574, 0.8976455950814117, 0.3476085390936913],
        [0.8078778109450546, -0.47922397321557636, 0.3430420179483891],
        [-0.923211529232622, -0.19295398545083114, 0.3323390313980654],
        [0.5522003598490529, 0.7685770368517058, 0.323054331354384],
        [0.11389191823634885, -0.941291903691232, 0.31780211296619976],
        [-0.7204834897464363, 0.6202349794924542, 0.31018077183602394],
        [0.9534304649647286, 0.029845254040700597, 0.300132652819362],
        [-0.6834953608757148, -0.6680916828118463, 0.2940877335405403],
        [0.05426304851665006, 0.9571736553602666, 0.2843837461071664],
        [0.6091268887417852, -0.7429816109380539, 0.27738557860791346],
        [-0.9526306099967518, 0.13861209613609668, 0.27070575853123985],
        [0.797528997537645, 0.5437290532930684, 0.2613545765652915],
        [-0.22208201138695546, -0.9410652866380974, 0.2550994051405836],
        [-0.47282447372705905, 0.8459734027595828, 0.2465076446443441],
        [0.9229913373782126, -0.30325671580863267, 0.23690157332052614],
        [-0.887587816403624, -0.3982675381168211, 0.23145374538817265],
        [0.38489523390180774, 0.8958535579582381, 0.22204067558273777],
        [0.32211597384775403, -0.9220102188796581, 0.2147986398318159],
        [-0.8617959404891303, 0.46358676228303763, 0.20590063329767955],
        [0.9497715326227875, 0.24045378410145785, 0.2002898238319934],
        [-0.538421266238329, -0.8206822616254958, 0.19126726200679506],
        [-0.1569330018199764, 0.9704999170105412, 0.18303536276442284],
        [0.7734789714458904, -0.609502832798399, 0.17388668017342263],
        [-0.9834995297878356, -0.07170233858198233, 0.16609470054454215],
        [0.6777410810469575, 0.7175842041063613, 0.16043670739061325],
        [-0.014296525084924976, -0.9882782828262072, 0.1519922533044995],
        [-0.6570663227065963, 0.739944283507968, 0.14403577634987358],
        [0.985620716822276, -0.10072512908927532, 0.13566963897899786],
        [-0.7960209587352902, -0.5916183042192232, 0.12782181099843634],
        [0.1878724961779491, 0.9746873023279875, 0.12119648452185722],
        [0.5214640904736295, -0.8458195940024433, 0.1125362908045767],
        [-0.9568738992312559, 0.2716319226373309, 0.1029972794510577],
        [0.8900562987808412, 0.4450606876975334, 0.09859396161402785],
        [-0.354175448113887, -0.9310474532466473, 0.0878088364360867],
        [-0.36633449953944613, 0.9268492712729758, 0.0821551141922244],
        [0.897127103728527, -0.4354184525368454, 0.07465742391807835],
        [-0.9562712502572731, -0.2852395873491043, 0.06468132450951002],
        [0.5135761698010295, 0.8558877130914874, 0.06079260145386139],
        [0.2006713607142175, -0.9784071477275893, 0.049502103638812335],
        [-0.8082296686923849, 0.5873888864466675, 0.04170250261484698],
        [0.9926953155515726, 0.11467462991366935, 0.03749319586440779],
        [-0.6554067523291006, -0.754838986023026, 0.02569229809010761],
        [-0.02583646506997893, 0.9994556286397549, 0.02051641910763542],
        [0.6949611247381418, -0.7189120125987238, 0.01394823443842126],
        [-0.9981070622780086, 0.06137618747739995, 0.0039058726940701645],
        [0.7768963205865657, 0.6296226734603677, -0.0027195815258046776],
        [-0.1470032616198208, -0.9890583639411866, -0.01239329621681363],
        [-0.5587212518577773, 0.8291040798791333, -0.02042027057249483],
        [0.9720200150273218, -0.23363200047485586, -0.024355261041549087],
        [-0.874049061728128, -0.4845335642323433, -0.03557334429710679],
        [0.31817160919453547, 0.9470506388551847, -0.043149907839370984],
        [0.40630682556674425, -0.9124048969030577, -0.049315997457172016],
        [-0.9147135832357353, 0.4001581288419031, -0.05632523915429489],
        [0.9436074388645839, 0.3240827510917932, -0.06764149439652647],
        [-0.47726554833974255, -0.8757283568615085, -0.07292078823358386],
        [-0.23928952384198618, 0.9674660504663685, -0.08215817046698307],
        [0.8300565028311849, -0.5506522002082082, -0.08825166578327152],
        [-0.9834115559150364, -0.15337676531991956, -0.09683635449956582],
        [0.6200790396560565, 0.7772061515199825, -0.10701673989951675],
        [0.06810614411241832, -0.9913598740866136, -0.11210331478200074],
        [-0.7189936986849575, 0.6845418780400654, -0.12021014291940932],
        [0.9913515441705922, -0.019122443675932844, -0.1298323843208729],
        [-0.7434635652967101, -0.6549051669497682, -0.13550331870032226],
        [0.10541248811976991, 0.983825117091841, -0.14483213154416],
        [0.5865196325551563, -0.7953290343026912, -0.15312232960124703],
        [-0.9684238732647624, 0.191365302958045, -0.15979525185264742],
        [0.8418959137265738, 0.5129450626663845, -0.1676264690813374],
        [-0.2745118620194356, -0.9455020479825387, -0.17512599713191454],
        [-0.43516894702508196, 0.8814381456633148, -0.18356138731960675],
        [0.9151405746217454, -0.35373751073428544, -0.1933584810151683],
        [-0.9130923557562869, -0.3558152959592756, -0.19914272525213583],
        [0.4319096515427013, 0.8777710953521523, -0.20729678499326798],
        [0.27410483686713666, -0.9373085179489244, -0.21521914549228924],
        [-0.8336949647473499, 0.5045713086100218, -0.22441145310007085],
        [0.9545561028191186, 0.19005451257160644, -0.22956900666672178],
        [-0.572945510707066, -0.7839440096555131, -0.2390925165827156],
        [-0.10544045157594743, 0.9633498173108253, -0.2466565236491023],
        [0.7275512684973013, -0.6366277871537683, -0.25568381319837924],
        [-0.96436133673075, -0.021498758492449022, -0.26371388966484943],
        [0.6965059135549986, 0.6652801429372065, -0.268852829251185],
        [-0.06272835039118131, -0.9586033874691695, -0.2777493466956037],
        [-0.5986245498876764, 0.7485676294599433, -0.28512304781707487],
        [0.9451353552381189, -0.1453142262371538, -0.2925797941280495],
        [-0.7930033602017537, -0.5288277486751609, -0.30246798663641883],
        [0.22770594097812136, 0.9237144667661387, -0.30806101397323293],
        [0.45568333882061146, -0.8319899796838174, -0.31645753021064427],
        [-0.8950339604626383, 0.30457769983702715, -0.32580152605620244],
        [0.8641253765471932, 0.3793767150478723, -0.33069720544125725],
        [-0.3790592147611026, -0.8599289771566245, -0.3418132033012448],
        [-0.3000821505512282, 0.8882988526832059, -0.347672045528901],
        [0.81934377233292, -0.45119593954228043, -0.35369196609453657],
        [-0.9050617331588198, -0.21974227677155375, -0.3641106850544311],
        [0.517907948121326, 0.7715573442204717, -0.36941930357279734],
        [0.13960054278510045, -0.9145138415141499, -0.3797053095930283],
        [-0.7168033775301144, 0.580200450579377, -0.38673033900756765],
        [0.9172865582312247, 0.058564540473028656, -0.39389791150436076],
        [-0.6352358879655576, -0.6593764540563254, -0.40211697113739964],
        [0.023137222083767256, 0.9118716518057894, -0.40982283926988206],
        [0.5979774597393006, -0.6855972301607239, -0.4151859771712872],
        [-0.8993367116330012, 0.10244846331513427, -0.425085628401511],
        [0.7274495513969208, 0.5309572359778422, -0.43462807518059454],
        [-0.1772006446147826, -0.8799995430446689, -0.4406821255613614],
        [-0.4614004655835752, 0.7645035762894011, -0.45015985183040924],
        [0.8536802287064982, -0.25188406539816144, -0.4558338345429347],
        [-0.7958479274139817, -0.3892201646218767, -0.4638251177788767],
        [0.3217221640339893, 0.8196747300604651, -0.4739495606808709],
        [0.3157928680738889, -0.8189089631105945, -0.47923165025986997],
        [-0.7821736095558313, 0.3902869459553274, -0.4856753486962928],
        [0.8339393742733426, 0.23966487211447893, -0.4970974442812355],
        [-0.45249743360319994, -0.7368366925161929, -0.5023124138863333],
        [-0.16303483924066106, 0.843682214151476, -0.5114879888308566],
        [0.6869878338650623, -0.5072730075140519, -0.5203093425732792],
        [-0.8456520127527725, -0.08829297173356913, -0.5263810639352825],
        [0.559368626061178, 0.6321737813432949, -0.5361558079145932],
        [0.013697025438101487, -0.8399488796078582, -0.5424926461618182],
        [-0.5742053575573574, 0.6047669799004816, -0.5518560567525538],
        [0.827100679950331, -0.058427956467125015, -0.5590086216944923],
        [-0.6444573164467626, -0.5131394489274463, -0.5668885897887466],
        [0.12875549758359206, 0.8083439831734217, -0.5744580286751404],
        [0.4477447578184112, -0.6767310511527855, -0.5844311047948921],
        [-0.7818705477534468, 0.19550053569137316, -0.591994921515473],
        [0.7066098492542103, 0.3811573444000858, -0.5961724580579153],
        [-0.25993089301638567, -0.7520415259872579, -0.6056975103518758],
        [-0.31224392253836697, 0.7262395408457215, -0.6124376393969021],
        [0.7149548262799624, -0.3188523912826288, -0.622232070012739],
        [-0.7368103707562467, -0.24400892255950796, -0.6305316195540003],
        [0.3765038785264812, 0.6736593140546502, -0.635946505644881],
        [0.1771674963169128, -0.7440431093183224, -0.6442138850760045],
        [-0.6260101871133539, 0.42537239166304114, -0.6535821096397668],
        [0.7438507120815367, 0.11028956770121393, -0.6591830772949727],
        [-0.4682706849210467, -0.5758084902361117, -0.6701993346875119],
        [-0.04341905762761341, 0.7347142488635924, -0.6769857885890495],
        [0.5247614926191836, -0.5097242767874512, -0.6817672165171893],
        [-0.7213056640343486, 0.02110459049139364, -0.6922952659755501],
        [0.541391233807391, 0.4682661603541209, -0.6982996026232003],
        [-0.08182271243588901, -0.7015870588492982, -0.7078704984563385],
        [-0.40868088989287854, 0.5686373373624282, -0.7138848007863263],
        [0.6779896008128244, -0.13988485972999348, -0.721638640323526],
        [-0.5891504269344444, -0.3492594487075469, -0.7286423072615689],
        [0.195112711949024, 0.6461936237393765, -0.7378108363764184],
        [0.29061525865253846, -0.6010413584200677, -0.7445079293781081],
        [-0.6120787449086844, 0.24607900485166895, -0.751534918285386],
        [0.6035888965848359, 0.22879422456476875, -0.7637628209891513],
        [-0.2884571014849924, -0.5720919527152555, -0.7677911814037216],
        [-0.17018484655869098, 0.6038875964029142, -0.7786892120175454],
        [0.5280599164366839, -0.3258131734597211, -0.7842184011185837],
        [-0.5986170501088988, -0.11484654818996973, -0.7927596720871776],
        [0.3552934176731159, 0.4780144116924479, -0.803286256307476],
        [0.058103040582390915, -0.5857846829371225, -0.8083813097241523],
        [-0.4278719726639546, 0.38333150713094455, -0.8185246060133896],
        [0.5659333988147977, 0.008049246558494273, -0.82441166763685],
        [-0.40472702558275403, -0.3794765940184637, -0.8319817001323303],
        [0.04139233667556733, 0.5427488705724927, -0.8388744470758541],
        [0.3278923022949421, -0.41483480783799065, -0.8487630530965281],
        [-0.511860675264352, 0.08473315485519936, -0.8548794895107767],
        [0.4252151899685443, 0.27944449478358574, -0.8608732871655161],
        [-0.12112076719930225, -0.475203604175917, -0.8714994517102527],
        [-0.22445122054946945, 0.4222782447583006, -0.8782384263955331],
        [0.4344423336774867, -0.15260244671601877, -0.887678067750434],
        [-0.40603196489750143, -0.17290295434116082, -0.8973531143655614],
        [0.18045915713748645, 0.3889185672032282, -0.9034250609153014],
        [0.1299751875761968, -0.39681115012319973, -0.9086513972654398],
        [-0.34439853061365716, 0.19867723802909812, -0.9175603561620799],
        [0.3690564283821744, 0.08390868986586336, -0.9256115191778825],
        [-0.2062019231787173, -0.2943327449555554, -0.9331929072406876],
        [-0.04466852367170851, 0.3288809501324452, -0.9433143927837474],
        [0.2505344147201716, -0.19762182237750228, -0.9477225977895726],
        [-0.2969176965147626, -0.021129099137610942, -0.9546692844467137],
        [0.17220946508517632, 0.18793579853081133, -0.9669664088093566],
        [-0.01130494597146477, -0.23687359049124806, -0.9714747039034864],
        [-0.11732034094657047, 0.15714520911076624, -0.9805821336602629],
        [0.15117656193085877, -0.006954603666975534, -0.9884823117338015],
        [-0.06675293816460844, -0.04480440427977513, -0.9967630664323023],
    ]),
    ("octahedron", 3, &[
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ]),
    ("icosahedron", 5, &[
        [0.0, 0.0, 1.0],
        [0.5257311121191336, 0.723606797749979, 0.447213595499958],
        [0.85065080835204, -0.276393202250021, 0.447213595499958],
        [0.0, 0.894427190999916, -0.44721359549995804],
        [0.5257311121191336, -0.723606797749979, -0.447213595499958],
        [0.85065080835204, 0.276393202250021, -0.447213595499958],
        [0.0, -0.894427190999916, 0.44721359549995804],
        [-0.5257311121191336, 0.723606797749979, 0.447213595499958],
        [-0.85065080835204, -0.276393202250021, 0.447213595499958],
        [0.0, -2.5851585790883854e-17, -1.0],
        [-0.5257311121191336, -0.723606797749979, -0.447213595499958],
        [-0.85065080835204, 0.276393202250021, -0.447213595499958],
    ]),
];

/// Names forming the default nested ladder, in ladder order.
pub(crate) const LADDER_ORDER: &[&str] = &[
    "pole",
    "antipodal",
    "tetrahedron",
    "antiprism-8",
    "design-16-t4",
    "design-32-t7",
    "design-64-t9",
    "design-128-t12",
    "design-256-t15",
];
