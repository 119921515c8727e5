//! Extended-precision reference values (40 significant digits, rounded to
//! f64), generated offline and frozen here.

#![allow(dead_code, clippy::excessive_precision)]

use std::f64::consts::PI;

use qtraj_core::cxfun::{gamma_cx, hyp2f1, ppow, Hyp2F1Params};
use qtraj_core::Cx;

fn c(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

fn f21(a: Cx, b: Cx, c: Cx, w: Cx) -> Cx {
    hyp2f1(Hyp2F1Params::new(a, b, c, w)).unwrap()
}

fn gamma(z: Cx) -> Cx {
    gamma_cx(z).unwrap()
}

/// Elementary closed forms, each `(label, computed, expected)`.
pub fn elementary_cases() -> Vec<(&'static str, Cx, Cx)> {
    let one = c(1.0, 0.0);
    let half = c(0.5, 0.0);
    let mut v = Vec::new();

    let w = c(0.3, 0.2);
    v.push((
        "log inside",
        f21(one, one, c(2.0, 0.0), w),
        -(one - w).ln() / w,
    ));
    let w = c(-4.0, 2.0);
    v.push((
        "log outside",
        f21(one, one, c(2.0, 0.0), w),
        -(one - w).ln() / w,
    ));
    let w = c(0.5, 0.866);
    v.push((
        "log near e^{iπ/3}",
        f21(one, one, c(2.0, 0.0), w),
        -(one - w).ln() / w,
    ));
    let w = c(0.9, 0.4);
    v.push(("log1p", f21(one, one, c(2.0, 0.0), -w), (one + w).ln() / w));

    let (a, b) = (c(0.7, -0.4), c(1.3, 0.2));
    for (label, w) in [
        ("binomial inside", c(0.6, -0.3)),
        ("binomial outside", c(3.0, 2.0)),
        ("binomial near e^{-iπ/3}", Cx::from_polar(0.98, -PI / 3.0)),
    ] {
        v.push((label, f21(a, b, b, w), ppow(one - w, -a).unwrap()));
    }

    let z = c(0.4, 0.3);
    v.push(("arcsin", f21(half, half, c(1.5, 0.0), z * z), z.asin() / z));
    let z = Cx::from_polar(1.0, PI / 6.0);
    v.push((
        "arcsin on the unit circle",
        f21(half, half, c(1.5, 0.0), z * z),
        z.asin() / z,
    ));
    let z = c(0.5, 0.5);
    v.push(("artanh", f21(half, one, c(1.5, 0.0), z * z), z.atanh() / z));
    let z = c(0.7, -0.5);
    v.push(("arctan", f21(half, one, c(1.5, 0.0), -z * z), z.atan() / z));

    let (b, cc, w) = (c(0.4, 0.1), c(1.7, -0.2), c(2.5, 1.0));
    let t1 = -3.0 * b / cc * w;
    let t2 = 3.0 * b * (b + 1.0) / (cc * (cc + 1.0)) * w * w;
    let t3 = -b * (b + 1.0) * (b + 2.0) / (cc * (cc + 1.0) * (cc + 2.0)) * w * w * w;
    v.push((
        "terminating cubic",
        f21(c(-3.0, 0.0), b, cc, w),
        one + t1 + t2 + t3,
    ));

    let (a, z) = (c(0.3, 0.2), c(0.6, 0.2));
    let even = (ppow(one + z, -2.0 * a).unwrap() + ppow(one - z, -2.0 * a).unwrap()) / 2.0;
    v.push(("quadratic even", f21(a, a + 0.5, half, z * z), even));
    let (a, z) = (c(0.3, -0.5), c(0.5, -0.4));
    let p = one - 2.0 * a;
    let odd = (ppow(one + z, p).unwrap() - ppow(one - z, p).unwrap()) / (2.0 * z * p);
    v.push(("quadratic odd", f21(a, a + 0.5, c(1.5, 0.0), z * z), odd));

    let (a, b) = (c(0.6, 0.3), c(0.2, -0.4));
    let kummer =
        gamma(one + a - b) * gamma(one + a / 2.0) / (gamma(one + a) * gamma(one + a / 2.0 - b));
    v.push(("Kummer at -1", f21(a, b, one + a - b, c(-1.0, 0.0)), kummer));

    v
}

// a_re, a_im, b_re, b_im, c_re, c_im, w_re, w_im, f_re, f_im
pub const HYP2F1_ORACLE: [[f64; 10]; 50] = [
    [
        6.82522405958850165e-01,
        -9.75468419249891805e-01,
        8.04556514684789281e-01,
        9.22050933873171275e-01,
        1.55938895917104436e+00,
        9.60711635321873647e-01,
        9.38190359109709326e-02,
        -2.24343434489650301e-01,
        9.19449179646295911e-01,
        -1.71518079320797906e-01,
    ],
    [
        -1.71312031915071383e-01,
        -6.89010830897844984e-01,
        -1.32017373965477436e+00,
        1.02166283385398238e+00,
        1.82174621613817256e+00,
        2.44295578986396444e+00,
        6.91676701764147528e-01,
        -3.63365788744766383e-01,
        1.25112068984506064e+00,
        -2.37213403928510674e-01,
    ],
    [
        -8.97614412811849394e-01,
        -1.27679676482694271e+00,
        -4.93059503682736766e-01,
        -1.16721442978496803e+00,
        4.24801593479187667e-01,
        2.16320016366466072e+00,
        -4.66559344384467511e+00,
        -3.18480600801071878e+00,
        5.02141286289219835e+00,
        -1.00025836031815327e+01,
    ],
    [
        1.36062115180502907e+00,
        -1.07110407587335255e+00,
        9.21776976499043332e-01,
        1.45609670623065135e+00,
        1.87609296329270214e+00,
        2.08340409045378516e+00,
        6.22575122267637004e-01,
        8.66152198778077254e-01,
        1.22686612807974438e+00,
        2.07085462339746185e+00,
    ],
    [
        5.00000000000000000e-01,
        -5.39852424585318680e+00,
        5.00000000000000000e-01,
        -1.92056116963235413e+00,
        1.00000000000000000e+00,
        -3.75708464239595363e+00,
        -4.16572768517909642e-02,
        8.99055333605978113e-01,
        2.20391149132179365e+00,
        6.06505532980281714e+00,
    ],
    [
        -6.16740445905623602e-02,
        5.68263911099933239e-01,
        -8.59041318075492333e-01,
        1.00168344551877198e+00,
        5.83880048939305896e-01,
        1.47446794380698498e+00,
        -3.48127351170846033e-01,
        1.42475683942415499e-01,
        1.11370318978148508e+00,
        -1.24813943765158419e-01,
    ],
    [
        2.44626103033678710e-01,
        -8.58784714921248304e-01,
        -1.21855170174248917e+00,
        -8.61353195515825343e-01,
        2.48163647221068739e+00,
        2.19043154044453914e+00,
        -2.94578217049427105e-01,
        8.06003848796172595e-01,
        6.49983239814237224e-01,
        -1.46049218973202916e-01,
    ],
    [
        5.55760071870314842e-02,
        -9.06618473185505369e-02,
        -1.15245230521000552e-01,
        9.16832745845618913e-01,
        2.10008814199563298e+00,
        1.28335872598530387e+00,
        6.28244487682607766e-01,
        -2.44885715330163123e+00,
        9.93223675520032434e-01,
        -1.05316368087682244e-01,
    ],
    [
        9.02035581745213033e-01,
        -3.09052873578204990e-01,
        -3.79375076960665414e-01,
        8.88081384946701746e-01,
        5.45108726420851286e-01,
        1.17857141538440335e+00,
        1.89768281806780981e+00,
        -8.20787072366598647e-01,
        2.33219535033638303e+00,
        -1.92204160760292364e+00,
    ],
    [
        5.00000000000000000e-01,
        -5.70291987784247478e+00,
        5.00000000000000000e-01,
        -2.99292508852740724e-01,
        1.00000000000000000e+00,
        -4.22830417890336907e+00,
        -8.84556143037840581e-01,
        -3.22848532624427198e-01,
        6.31630978071803906e-01,
        1.14892449480273939e-01,
    ],
    [
        -1.03820932990837345e+00,
        -4.42631401377943323e-01,
        1.47782759242481188e+00,
        -3.43919269226584667e-02,
        1.91514334156620802e+00,
        1.07299873134815305e+00,
        4.12654441057723365e-01,
        -8.67118094335387002e-01,
        7.82483080589364555e-01,
        5.86882318334383868e-01,
    ],
    [
        -8.34582596824553602e-01,
        -5.32981966862904000e-01,
        1.04494631386790715e+00,
        -1.19591283884487920e+00,
        7.58865573912921976e-01,
        1.26224126858420327e+00,
        8.00378082846651129e-01,
        4.49218234603954436e-01,
        8.32660953880000720e-01,
        6.85765210501563027e-01,
    ],
    [
        3.49225084137045672e-01,
        1.01530160819738224e+00,
        5.05331155698412360e-01,
        -1.08444499163866226e-01,
        1.56567372981178221e+00,
        1.90606607690620500e+00,
        1.23932259932601085e+00,
        -2.45978399369306411e+00,
        8.94142301495033487e-01,
        -4.95111613517016713e-01,
    ],
    [
        3.91937734489110845e-01,
        -8.97346262273435502e-01,
        3.66693338491468124e-01,
        -1.15308956710223942e+00,
        5.61885669117289543e-01,
        9.35487828848763581e-01,
        -7.71571899929781452e-02,
        2.38937363504062761e+00,
        7.92293083848600332e+00,
        -6.05790858508327545e+00,
    ],
    [
        5.00000000000000000e-01,
        -3.59737520044633730e+00,
        5.00000000000000000e-01,
        -1.43016315757481172e+00,
        1.00000000000000000e+00,
        -2.53953613992551963e+00,
        6.67988360342872012e-01,
        6.55620149982801714e-01,
        1.09151121648361169e+01,
        -4.55305506621164557e+00,
    ],
    [
        2.20759569206501194e-02,
        -2.91553189655294531e-01,
        3.49305225547487996e-01,
        -1.58699887235217663e-01,
        9.02128404078192725e-01,
        8.25950029466595126e-01,
        1.44341247029753150e-01,
        8.73520408610628102e-02,
        9.91220481120675845e-01,
        -1.39037924032455601e-02,
    ],
    [
        3.59753623907566489e-01,
        -4.63356516900372828e-01,
        1.26568388506374863e+00,
        -2.93590800659903950e-01,
        9.62437176312777476e-01,
        2.34953401411947649e+00,
        -2.15462688984941225e-01,
        -9.21046127539184134e-01,
        8.83922200005996750e-01,
        1.57469624226467819e-01,
    ],
    [
        9.85912527745083089e-01,
        6.56172357443835175e-01,
        4.96612638317221133e-01,
        4.75107560225894510e-01,
        2.27601628424168467e+00,
        1.15719502561622556e+00,
        5.08655213135274620e-01,
        -8.02007635506109873e-01,
        1.32575071278453738e+00,
        -2.02322563105748421e-01,
    ],
    [
        -3.94952122137785189e-01,
        -8.91777587115197279e-01,
        5.38504213526131981e-01,
        1.11881533074396700e+00,
        1.07865641321867822e+00,
        1.56490638573333030e+00,
        -8.58496035645394784e-01,
        5.53961964723018285e-01,
        1.30003448628666596e+00,
        5.35950802450002928e-01,
    ],
    [
        5.00000000000000000e-01,
        -2.86985285713928340e+00,
        5.00000000000000000e-01,
        6.55501371483853679e-01,
        1.00000000000000000e+00,
        -1.42255769123168974e+00,
        1.02010848415354261e+00,
        3.61665246275375052e-01,
        -4.36061125854333920e+00,
        7.79488242247489893e+00,
    ],
    [
        1.36080622805183982e+00,
        2.16236621274949581e-01,
        6.56410806644611711e-01,
        -1.70470581725910897e-01,
        7.88398786333678325e-01,
        5.93773135609248603e-01,
        2.23637662567648665e-01,
        -1.93739909656491377e-01,
        9.35206418024394415e-01,
        -3.12631927789938258e-01,
    ],
    [
        -1.36513376232360484e+00,
        1.45085471724373827e+00,
        -6.39536505089803864e-01,
        -1.47938676568319938e+00,
        2.26781200965480734e+00,
        1.94049708890632888e+00,
        5.87785048594291815e-01,
        2.16689682348178453e-01,
        1.81300546299157839e+00,
        4.37691654352620613e-02,
    ],
    [
        -5.81149696410119709e-01,
        -9.45530453732948195e-01,
        9.52113862597405713e-01,
        -1.29914649210430388e-01,
        6.13745765271910937e-01,
        1.53222328378153660e+00,
        -2.64488734349568100e+00,
        1.78280236883974652e+00,
        3.97277691358095764e+00,
        -2.53754493803083903e-01,
    ],
    [
        -1.98263803875992073e-01,
        -3.72927579851551005e-01,
        -3.94150858669124027e-01,
        -1.49504432742248783e-01,
        9.45430007383054827e-01,
        4.64023253974730654e-01,
        -2.86708363490282414e+00,
        5.40157347502853380e-01,
        7.75057286848650828e-01,
        -3.56600849119668883e-01,
    ],
    [
        5.00000000000000000e-01,
        -2.92260075500901362e+00,
        5.00000000000000000e-01,
        -6.40586438711141182e-01,
        1.00000000000000000e+00,
        -2.20261997861920422e+00,
        3.94475499435475219e-01,
        -8.20767390133510855e-01,
        4.30248689616519964e-01,
        -1.41229001671836274e-01,
    ],
    [
        -5.68882648378003064e-01,
        1.27430870067161051e+00,
        -1.72747644545381718e-01,
        -1.16246367876322410e+00,
        2.10878494636284586e+00,
        1.93603787976883912e+00,
        2.94757267771920461e-01,
        -2.28739938880958699e-01,
        1.07883775487391231e+00,
        -2.11888496361317874e-01,
    ],
    [
        -1.13304499625117550e+00,
        -1.09840288711856893e+00,
        -7.78003439849244138e-02,
        3.67304267417662977e-01,
        1.54722765634988257e+00,
        5.86977617505176408e-01,
        5.59577147510304518e-01,
        -2.62804219580359322e-01,
        1.01194175957804444e+00,
        -2.06407797261654702e-01,
    ],
    [
        6.01559770400796889e-01,
        1.03612309574767814e+00,
        -6.94068395277621986e-01,
        1.31132612606457943e+00,
        2.27615900325295328e+00,
        2.60773979682149326e-01,
        -1.87855999140758789e+00,
        2.75776243490974116e+00,
        7.03599602862585938e-01,
        -1.62411887332331140e+00,
    ],
    [
        -1.16039427358806679e+00,
        3.91594261364085483e-02,
        -1.29934141236363931e-01,
        -2.61807156388147444e-01,
        1.66084571287690186e+00,
        1.79459361533650252e+00,
        -6.64037363985987339e-01,
        9.41166053614553966e-01,
        8.81825644731153657e-01,
        1.05430900402809391e-01,
    ],
    [
        5.00000000000000000e-01,
        -5.53785073633723002e+00,
        5.00000000000000000e-01,
        -2.16800895903535640e+00,
        1.00000000000000000e+00,
        -4.19604285909644936e+00,
        7.74715386441040876e-01,
        -7.14610730509154357e-01,
        2.38683783221316156e-02,
        -2.21615561857363107e-02,
    ],
    [
        -7.21545590558305028e-01,
        1.06480635971305837e+00,
        8.88839917278266167e-01,
        2.44785134300048224e-01,
        1.86302521846973779e+00,
        2.55654167393577714e-01,
        1.25098662061936566e-01,
        -3.89436955394595441e-01,
        1.15395344255446175e+00,
        2.60102836406449378e-01,
    ],
    [
        9.71067240168999479e-01,
        -4.47379528418304862e-01,
        4.56082912688854147e-01,
        1.28333129273370705e+00,
        1.21679997664937489e+00,
        7.93781358665512027e-01,
        5.43279966419941807e-01,
        -8.44667581704948933e-01,
        8.95356379495339527e-01,
        -1.29163498890929662e+00,
    ],
    [
        -7.26473229320208969e-01,
        -1.16993529096471227e+00,
        8.91127262036867318e-01,
        -1.14137197852719163e+00,
        2.41718707329794835e+00,
        2.48897049107118695e+00,
        -2.90799748865831209e-01,
        -3.26269526005309496e+00,
        1.32622611172415494e+00,
        1.37555026981934692e+00,
    ],
    [
        1.40164418890176679e+00,
        1.14934842979299567e+00,
        1.38992902635775550e+00,
        1.32009283155885493e+00,
        1.37905188709459070e+00,
        1.79441423928863775e+00,
        8.00057996546348904e-01,
        6.75540027047464964e-01,
        -2.59843652218067545e-01,
        5.26961857061915895e-01,
    ],
    [
        5.00000000000000000e-01,
        -3.33527391676576634e+00,
        5.00000000000000000e-01,
        -2.90762912642896998e-01,
        1.00000000000000000e+00,
        -2.23520023197788076e+00,
        -9.44452975533216832e-01,
        2.97315880278980482e-01,
        6.52464558998813282e-01,
        2.96455169383962935e-01,
    ],
    [
        -1.68429273491066844e-01,
        1.09012008420930062e+00,
        -8.87187066538355218e-02,
        8.37074890832603558e-01,
        6.48198514004216353e-01,
        1.69960454401044680e+00,
        -3.01572987396564851e-01,
        -1.03174115350938927e-01,
        1.11786986661095722e+00,
        -1.02079496202836142e-01,
    ],
    [
        -1.07578576329719322e+00,
        -1.15457875653910413e-02,
        2.71529622261531767e-01,
        6.89877862725411184e-01,
        1.80237971431030508e+00,
        1.31648640593196964e+00,
        -2.60860541683762936e-01,
        7.24395978778676675e-01,
        1.21921574139737632e+00,
        -1.69976924129247808e-01,
    ],
    [
        -8.77088409442605799e-01,
        -4.40192356928054807e-01,
        -7.10429493780288412e-01,
        -4.23309075761189479e-01,
        2.40085322242552435e+00,
        2.30928713137427843e+00,
        -2.75733384409766913e+00,
        -9.69130941085231234e-01,
        3.91255232435817335e-01,
        -4.35674311706047590e-01,
    ],
    [
        -9.87906299641885921e-01,
        -9.94860550220168838e-01,
        1.06321206989990058e+00,
        -6.71899249592544101e-01,
        2.33729590310369728e+00,
        2.38110746440010335e+00,
        5.09391482116330563e-01,
        7.98526662312738056e-01,
        4.78267199779893404e-01,
        -4.40935164048248535e-02,
    ],
    [
        5.00000000000000000e-01,
        -4.93946119136412598e+00,
        5.00000000000000000e-01,
        -1.06443222220158473e+00,
        1.00000000000000000e+00,
        -3.73032656351310754e+00,
        4.66022018811173666e-01,
        -8.92612575446208978e-01,
        2.38267867784564796e-01,
        -6.69682106985944048e-02,
    ],
    [
        1.48025025717484970e+00,
        -7.71829227821457020e-01,
        3.62384643611200818e-01,
        7.47545207668638856e-01,
        6.35370844009515823e-01,
        2.32779960558256027e+00,
        -1.75826239634702369e-01,
        -1.15177297985511823e-01,
        8.94500849144439614e-01,
        6.48766670815392830e-03,
    ],
    [
        -1.34357195472233570e+00,
        1.38721764361683020e+00,
        -1.48762623361631618e+00,
        1.47797903630492788e+00,
        2.13111691178877738e+00,
        7.11123920588653480e-01,
        -6.98642403514571853e-01,
        -3.67998800308015017e-01,
        4.44901368823120591e-01,
        1.68283831867178391e+00,
    ],
    [
        4.13058420956065042e-02,
        7.50456006303656942e-02,
        1.47208648071275849e+00,
        1.28329959857371501e+00,
        6.48351514472783275e-01,
        8.74540027513008855e-01,
        3.44333110095303674e+00,
        -6.69836802612880700e-01,
        1.04389329716936152e+00,
        -2.19382560043799218e-01,
    ],
    [
        1.29409415006826389e+00,
        1.77787343945020826e-01,
        -1.36397450078217020e+00,
        -1.56146774296557211e-01,
        7.02951495371631818e-01,
        2.21099957658820889e+00,
        1.18516878615820187e+00,
        8.89241461263639454e-01,
        3.89607612918237423e-01,
        4.00659522002773383e-01,
    ],
    [
        5.00000000000000000e-01,
        -4.73456921833388300e+00,
        5.00000000000000000e-01,
        8.63827273940475981e-01,
        1.00000000000000000e+00,
        -2.89355282568025229e+00,
        9.23146150079149908e-01,
        3.17990392420866713e-02,
        1.64147433268421814e+01,
        1.61451951720016282e+01,
    ],
    [
        -5.36233033641084433e-01,
        -8.14678022848294048e-01,
        -1.16979832328234168e+00,
        8.49825775132414751e-01,
        2.38624800090174904e+00,
        1.64402102859528121e+00,
        4.09783174940777317e-01,
        8.35760618820278522e-01,
        1.25661161509619945e+00,
        3.79863608351264259e-01,
    ],
    [
        1.40253357991063599e+00,
        9.14690545257827559e-01,
        1.39450277367431674e+00,
        -8.92511246730854579e-01,
        7.12128971696655233e-01,
        7.81005360580601549e-01,
        -2.81691469669021977e-01,
        6.60890628085148868e-01,
        2.52045425171941173e-01,
        1.16887220815375792e+00,
    ],
    [
        -7.44337414068884651e-01,
        -1.37694582999782078e+00,
        -3.11803755854147324e-01,
        1.13734177571576822e+00,
        1.01009034688678812e+00,
        1.49480110544662170e+00,
        -8.54607207077285214e-01,
        4.70823894187638281e+00,
        -5.83349078967758339e-01,
        6.70323149989740852e+00,
    ],
    [
        1.01732222291036134e+00,
        -2.53646351823389571e-01,
        1.00520794620030252e+00,
        -1.75987701700899724e-01,
        2.09864065374041031e+00,
        1.30253091574833735e+00,
        -1.04267259978242866e+00,
        -8.15975445166531310e-01,
        6.85012058591353279e-01,
        9.55198059786728088e-02,
    ],
    [
        5.00000000000000000e-01,
        -4.26642675043198683e+00,
        5.00000000000000000e-01,
        -6.10409383847996256e-01,
        1.00000000000000000e+00,
        -2.97415083501778366e+00,
        -7.89486714718223070e-01,
        7.56700280928469304e-01,
        6.49931510827972514e-01,
        7.02503923585519274e-01,
    ],
];
pub const GAMMA_ORACLE: [[f64; 4]; 8] = [
    [
        2.50000000000000000e+00,
        1.50000000000000000e+00,
        3.09936225840741375e-01,
        7.34084273621481320e-01,
    ],
    [
        1.00000000000000006e-01,
        2.00000000000000011e-01,
        1.53910034338679469e+00,
        -3.83849190183791089e+00,
    ],
    [
        -3.29999999999999982e+00,
        4.00000000000000022e-01,
        9.29242342982545544e-02,
        1.77783393876840279e-01,
    ],
    [
        1.00000000000000000e+01,
        -2.00000000000000000e+01,
        -1.33713977828472025e-01,
        -1.23674975271245255e-01,
    ],
    [
        4.50000000000000000e+01,
        5.00000000000000000e+00,
        1.98925174161528785e+54,
        2.77235647678495639e+53,
    ],
    [
        5.00000000000000000e-01,
        3.00000000000000000e+01,
        -8.37364769671325874e-21,
        1.86653765229449216e-21,
    ],
    [
        -1.25000000000000000e+01,
        -3.00000000000000000e+00,
        -5.50684427339500540e-14,
        4.14062154776605069e-13,
    ],
    [
        1.00000000000000000e+00,
        -1.00000000000000002e-03,
        9.99999010944986444e-01,
        5.77214757423438795e-04,
    ],
];
