"""Tracy-Widom beta=1 tables. Generated by tools/gen_tw1_table.py."""

import numpy as np

QUANTILE_PROB_START = 0.001
QUANTILE_PROB_STOP = 0.999
QUANTILE_COUNT = 999

QUANTILES = np.array([
    -4.654198398010e+00, -4.447683629910e+00, -4.319189249115e+00, -4.224097178001e+00, -4.147876510535e+00,
    -4.083880617097e+00, -4.028489202148e+00, -3.979503343742e+00, -3.935483237297e+00, -3.895432675064e+00,
    -3.858632595539e+00, -3.824546294697e+00, -3.792762124617e+00, -3.762957149563e+00, -3.734873165278e+00,
    -3.708300343107e+00, -3.683065755821e+00, -3.659025130378e+00, -3.636056793486e+00, -3.614057143634e+00,
    -3.592937208549e+00, -3.572619989187e+00, -3.553038383369e+00, -3.534133543128e+00, -3.515853561071e+00,
    -3.498152409453e+00, -3.480989075604e+00, -3.464326851500e+00, -3.448132745531e+00, -3.432376991990e+00,
    -3.417032639360e+00, -3.402075202632e+00, -3.387482368018e+00, -3.373233740829e+00, -3.359310629131e+00,
    -3.345695857237e+00, -3.332373604204e+00, -3.319329263409e+00, -3.306549319970e+00, -3.294021243351e+00,
    -3.281733392934e+00, -3.269674934722e+00, -3.257835767631e+00, -3.246206458055e+00, -3.234778181633e+00,
    -3.223542671266e+00, -3.212492170599e+00, -3.201619392288e+00, -3.190917480477e+00, -3.180379976972e+00,
    -3.170000790693e+00, -3.159774170021e+00, -3.149694677718e+00, -3.139757168142e+00, -3.129956766491e+00,
    -3.120288849889e+00, -3.110749030097e+00, -3.101333137691e+00, -3.092037207569e+00, -3.082857465638e+00,
    -3.073790316577e+00, -3.064832332581e+00, -3.055980242967e+00, -3.047230924591e+00, -3.038581392990e+00,
    -3.030028794177e+00, -3.021570397041e+00, -3.013203586299e+00, -3.004925855948e+00, -2.996734803175e+00,
    -2.988628122690e+00, -2.980603601445e+00, -2.972659113712e+00, -2.964792616478e+00, -2.957002145153e+00,
    -2.949285809546e+00, -2.941641790103e+00, -2.934068334380e+00, -2.926563753736e+00, -2.919126420221e+00,
    -2.911754763671e+00, -2.904447268952e+00, -2.897202473388e+00, -2.890018964330e+00, -2.882895376861e+00,
    -2.875830391643e+00, -2.868822732874e+00, -2.861871166366e+00, -2.854974497729e+00, -2.848131570645e+00,
    -2.841341265250e+00, -2.834602496585e+00, -2.827914213143e+00, -2.821275395483e+00, -2.814685054920e+00,
    -2.808142232279e+00, -2.801645996711e+00, -2.795195444575e+00, -2.788789698365e+00, -2.782427905699e+00,
    -2.776109238350e+00, -2.769832891328e+00, -2.763598082003e+00, -2.757404049271e+00, -2.751250052756e+00,
    -2.745135372055e+00, -2.739059306007e+00, -2.733021172010e+00, -2.727020305350e+00, -2.721056058580e+00,
    -2.715127800908e+00, -2.709234917625e+00, -2.703376809551e+00, -2.697552892506e+00, -2.691762596805e+00,
    -2.686005366774e+00, -2.680280660283e+00, -2.674587948302e+00, -2.668926714474e+00, -2.663296454707e+00,
    -2.657696676778e+00, -2.652126899957e+00, -2.646586654646e+00, -2.641075482029e+00, -2.635592933737e+00,
    -2.630138571530e+00, -2.624711966984e+00, -2.619312701195e+00, -2.613940364495e+00, -2.608594556172e+00,
    -2.603274884210e+00, -2.597980965029e+00, -2.592712423245e+00, -2.587468891425e+00, -2.582250009867e+00,
    -2.577055426372e+00, -2.571884796039e+00, -2.566737781055e+00, -2.561614050498e+00, -2.556513280149e+00,
    -2.551435152305e+00, -2.546379355602e+00, -2.541345584843e+00, -2.536333540833e+00, -2.531342930219e+00,
    -2.526373465331e+00, -2.521424864038e+00, -2.516496849598e+00, -2.511589150521e+00, -2.506701500432e+00,
    -2.501833637941e+00, -2.496985306512e+00, -2.492156254346e+00, -2.487346234257e+00, -2.482555003559e+00,
    -2.477782323954e+00, -2.473027961422e+00, -2.468291686119e+00, -2.463573272272e+00, -2.458872498083e+00,
    -2.454189145633e+00, -2.449523000786e+00, -2.444873853105e+00, -2.440241495758e+00, -2.435625725438e+00,
    -2.431026342278e+00, -2.426443149775e+00, -2.421875954706e+00, -2.417324567059e+00, -2.412788799956e+00,
    -2.408268469583e+00, -2.403763395123e+00, -2.399273398684e+00, -2.394798305238e+00, -2.390337942557e+00,
    -2.385892141149e+00, -2.381460734202e+00, -2.377043557519e+00, -2.372640449470e+00, -2.368251250930e+00,
    -2.363875805226e+00, -2.359513958090e+00, -2.355165557600e+00, -2.350830454139e+00, -2.346508500337e+00,
    -2.342199551036e+00, -2.337903463231e+00, -2.333620096037e+00, -2.329349310639e+00, -2.325090970249e+00,
    -2.320844940071e+00, -2.316611087253e+00, -2.312389280854e+00, -2.308179391802e+00, -2.303981292859e+00,
    -2.299794858583e+00, -2.295619965293e+00, -2.291456491035e+00, -2.287304315549e+00, -2.283163320233e+00,
    -2.279033388115e+00, -2.274914403818e+00, -2.270806253530e+00, -2.266708824979e+00, -2.262622007395e+00,
    -2.258545691490e+00, -2.254479769425e+00, -2.250424134785e+00, -2.246378682552e+00, -2.242343309078e+00,
    -2.238317912062e+00, -2.234302390524e+00, -2.230296644779e+00, -2.226300576416e+00, -2.222314088276e+00,
    -2.218337084424e+00, -2.214369470134e+00, -2.210411151860e+00, -2.206462037222e+00, -2.202522034981e+00,
    -2.198591055018e+00, -2.194669008319e+00, -2.190755806951e+00, -2.186851364045e+00, -2.182955593778e+00,
    -2.179068411355e+00, -2.175189732989e+00, -2.171319475885e+00, -2.167457558226e+00, -2.163603899150e+00,
    -2.159758418741e+00, -2.155921038007e+00, -2.152091678867e+00, -2.148270264137e+00, -2.144456717513e+00,
    -2.140650963557e+00, -2.136852927682e+00, -2.133062536139e+00, -2.129279716003e+00, -2.125504395160e+00,
    -2.121736502292e+00, -2.117975966865e+00, -2.114222719116e+00, -2.110476690044e+00, -2.106737811391e+00,
    -2.103006015635e+00, -2.099281235978e+00, -2.095563406332e+00, -2.091852461310e+00, -2.088148336216e+00,
    -2.084450967027e+00, -2.080760290394e+00, -2.077076243621e+00, -2.073398764660e+00, -2.069727792100e+00,
    -2.066063265158e+00, -2.062405123666e+00, -2.058753308067e+00, -2.055107759398e+00, -2.051468419291e+00,
    -2.047835229954e+00, -2.044208134167e+00, -2.040587075276e+00, -2.036971997177e+00, -2.033362844317e+00,
    -2.029759561675e+00, -2.026162094765e+00, -2.022570389620e+00, -2.018984392788e+00, -2.015404051324e+00,
    -2.011829312780e+00, -2.008260125202e+00, -2.004696437119e+00, -2.001138197538e+00, -1.997585355936e+00,
    -1.994037862253e+00, -1.990495666886e+00, -1.986958720682e+00, -1.983426974933e+00, -1.979900381366e+00,
    -1.976378892139e+00, -1.972862459837e+00, -1.969351037461e+00, -1.965844578426e+00, -1.962343036553e+00,
    -1.958846366065e+00, -1.955354521578e+00, -1.951867458101e+00, -1.948385131024e+00, -1.944907496117e+00,
    -1.941434509524e+00, -1.937966127757e+00, -1.934502307689e+00, -1.931043006554e+00, -1.927588181936e+00,
    -1.924137791770e+00, -1.920691794331e+00, -1.917250148236e+00, -1.913812812433e+00, -1.910379746199e+00,
    -1.906950909138e+00, -1.903526261173e+00, -1.900105762541e+00, -1.896689373793e+00, -1.893277055785e+00,
    -1.889868769679e+00, -1.886464476932e+00, -1.883064139299e+00, -1.879667718823e+00, -1.876275177837e+00,
    -1.872886478953e+00, -1.869501585066e+00, -1.866120459344e+00, -1.862743065226e+00, -1.859369366421e+00,
    -1.855999326901e+00, -1.852632910900e+00, -1.849270082906e+00, -1.845910807666e+00, -1.842555050172e+00,
    -1.839202775667e+00, -1.835853949636e+00, -1.832508537804e+00, -1.829166506135e+00, -1.825827820826e+00,
    -1.822492448304e+00, -1.819160355226e+00, -1.815831508472e+00, -1.812505875145e+00, -1.809183422566e+00,
    -1.805864118273e+00, -1.802547930017e+00, -1.799234825758e+00, -1.795924773664e+00, -1.792617742109e+00,
    -1.789313699667e+00, -1.786012615114e+00, -1.782714457419e+00, -1.779419195747e+00, -1.776126799457e+00,
    -1.772837238092e+00, -1.769550481384e+00, -1.766266499249e+00, -1.762985261785e+00, -1.759706739268e+00,
    -1.756430902150e+00, -1.753157721059e+00, -1.749887166794e+00, -1.746619210323e+00, -1.743353822784e+00,
    -1.740090975478e+00, -1.736830639869e+00, -1.733572787583e+00, -1.730317390404e+00, -1.727064420271e+00,
    -1.723813849281e+00, -1.720565649679e+00, -1.717319793864e+00, -1.714076254381e+00, -1.710835003922e+00,
    -1.707596015324e+00, -1.704359261564e+00, -1.701124715761e+00, -1.697892351173e+00, -1.694662141193e+00,
    -1.691434059351e+00, -1.688208079306e+00, -1.684984174852e+00, -1.681762319910e+00, -1.678542488528e+00,
    -1.675324654882e+00, -1.672108793270e+00, -1.668894878112e+00, -1.665682883949e+00, -1.662472785442e+00,
    -1.659264557366e+00, -1.656058174615e+00, -1.652853612195e+00, -1.649650845223e+00, -1.646449848929e+00,
    -1.643250598651e+00, -1.640053069834e+00, -1.636857238029e+00, -1.633663078893e+00, -1.630470568182e+00,
    -1.627279681757e+00, -1.624090395577e+00, -1.620902685700e+00, -1.617716528282e+00, -1.614531899571e+00,
    -1.611348775912e+00, -1.608167133741e+00, -1.604986949588e+00, -1.601808200068e+00, -1.598630861889e+00,
    -1.595454911843e+00, -1.592280326808e+00, -1.589107083749e+00, -1.585935159711e+00, -1.582764531821e+00,
    -1.579595177288e+00, -1.576427073399e+00, -1.573260197518e+00, -1.570094527088e+00, -1.566930039625e+00,
    -1.563766712719e+00, -1.560604524035e+00, -1.557443451306e+00, -1.554283472339e+00, -1.551124565008e+00,
    -1.547966707255e+00, -1.544809877088e+00, -1.541654052583e+00, -1.538499211879e+00, -1.535345333176e+00,
    -1.532192394740e+00, -1.529040374896e+00, -1.525889252027e+00, -1.522739004578e+00, -1.519589611048e+00,
    -1.516441049996e+00, -1.513293300033e+00, -1.510146339826e+00, -1.507000148095e+00, -1.503854703611e+00,
    -1.500709985198e+00, -1.497565971726e+00, -1.494422642117e+00, -1.491279975341e+00, -1.488137950413e+00,
    -1.484996546394e+00, -1.481855742389e+00, -1.478715517549e+00, -1.475575851065e+00, -1.472436722170e+00,
    -1.469298110139e+00, -1.466159994284e+00, -1.463022353958e+00, -1.459885168551e+00, -1.456748417487e+00,
    -1.453612080229e+00, -1.450476136272e+00, -1.447340565147e+00, -1.444205346415e+00, -1.441070459670e+00,
    -1.437935884536e+00, -1.434801600668e+00, -1.431667587749e+00, -1.428533825488e+00, -1.425400293625e+00,
    -1.422266971922e+00, -1.419133840167e+00, -1.416000878174e+00, -1.412868065778e+00, -1.409735382836e+00,
    -1.406602809228e+00, -1.403470324853e+00, -1.400337909629e+00, -1.397205543495e+00, -1.394073206404e+00,
    -1.390940878329e+00, -1.387808539256e+00, -1.384676169189e+00, -1.381543748142e+00, -1.378411256146e+00,
    -1.375278673241e+00, -1.372145979480e+00, -1.369013154926e+00, -1.365880179652e+00, -1.362747033739e+00,
    -1.359613697275e+00, -1.356480150355e+00, -1.353346373082e+00, -1.350212345562e+00, -1.347078047906e+00,
    -1.343943460227e+00, -1.340808562642e+00, -1.337673335269e+00, -1.334537758226e+00, -1.331401811632e+00,
    -1.328265475603e+00, -1.325128730255e+00, -1.321991555700e+00, -1.318853932047e+00, -1.315715839399e+00,
    -1.312577257854e+00, -1.309438167506e+00, -1.306298548437e+00, -1.303158380726e+00, -1.300017644439e+00,
    -1.296876319635e+00, -1.293734386360e+00, -1.290591824649e+00, -1.287448614525e+00, -1.284304735997e+00,
    -1.281160169061e+00, -1.278014893696e+00, -1.274868889866e+00, -1.271722137518e+00, -1.268574616581e+00,
    -1.265426306965e+00, -1.262277188561e+00, -1.259127241240e+00, -1.255976444849e+00, -1.252824779216e+00,
    -1.249672224144e+00, -1.246518759413e+00, -1.243364364776e+00, -1.240209019962e+00, -1.237052704674e+00,
    -1.233895398584e+00, -1.230737081340e+00, -1.227577732555e+00, -1.224417331817e+00, -1.221255858679e+00,
    -1.218093292664e+00, -1.214929613259e+00, -1.211764799920e+00, -1.208598832067e+00, -1.205431689083e+00,
    -1.202263350316e+00, -1.199093795073e+00, -1.195923002625e+00, -1.192750952204e+00, -1.189577622998e+00,
    -1.186402994155e+00, -1.183227044782e+00, -1.180049753940e+00, -1.176871100647e+00, -1.173691063875e+00,
    -1.170509622549e+00, -1.167326755547e+00, -1.164142441700e+00, -1.160956659786e+00, -1.157769388536e+00,
    -1.154580606629e+00, -1.151390292689e+00, -1.148198425290e+00, -1.145004982949e+00, -1.141809944129e+00,
    -1.138613287235e+00, -1.135414990616e+00, -1.132215032562e+00, -1.129013391302e+00, -1.125810045006e+00,
    -1.122604971782e+00, -1.119398149674e+00, -1.116189556662e+00, -1.112979170664e+00, -1.109766969528e+00,
    -1.106552931037e+00, -1.103337032904e+00, -1.100119252776e+00, -1.096899568226e+00, -1.093677956757e+00,
    -1.090454395798e+00, -1.087228862706e+00, -1.084001334762e+00, -1.080771789169e+00, -1.077540203056e+00,
    -1.074306553470e+00, -1.071070817381e+00, -1.067832971677e+00, -1.064592993163e+00, -1.061350858561e+00,
    -1.058106544510e+00, -1.054860027561e+00, -1.051611284180e+00, -1.048360290741e+00, -1.045107023534e+00,
    -1.041851458752e+00, -1.038593572502e+00, -1.035333340791e+00, -1.032070739538e+00, -1.028805744560e+00,
    -1.025538331581e+00, -1.022268476223e+00, -1.018996154011e+00, -1.015721340366e+00, -1.012444010606e+00,
    -1.009164139948e+00, -1.005881703500e+00, -1.002596676264e+00, -9.993090331345e-01, -9.960187488950e-01,
    -9.927257982180e-01, -9.894301556631e-01, -9.861317956757e-01, -9.828306925854e-01, -9.795268206043e-01,
    -9.762201538259e-01, -9.729106662232e-01, -9.695983316473e-01, -9.662831238257e-01, -9.629650163609e-01,
    -9.596439827288e-01, -9.563199962768e-01, -9.529930302225e-01, -9.496630576517e-01, -9.463300515172e-01,
    -9.429939846366e-01, -9.396548296911e-01, -9.363125592233e-01, -9.329671456359e-01, -9.296185611894e-01,
    -9.262667780009e-01, -9.229117680420e-01, -9.195535031371e-01, -9.161919549614e-01, -9.128270950391e-01,
    -9.094588947417e-01, -9.060873252859e-01, -9.027123577317e-01, -8.993339629807e-01, -8.959521117738e-01,
    -8.925667746894e-01, -8.891779221414e-01, -8.857855243771e-01, -8.823895514753e-01, -8.789899733438e-01,
    -8.755867597180e-01, -8.721798801582e-01, -8.687693040476e-01, -8.653550005903e-01, -8.619369388088e-01,
    -8.585150875421e-01, -8.550894154432e-01, -8.516598909770e-01, -8.482264824176e-01, -8.447891578468e-01,
    -8.413478851506e-01, -8.379026320180e-01, -8.344533659375e-01, -8.310000541954e-01, -8.275426638730e-01,
    -8.240811618441e-01, -8.206155147727e-01, -8.171456891099e-01, -8.136716510918e-01, -8.101933667368e-01,
    -8.067108018425e-01, -8.032239219835e-01, -7.997326925085e-01, -7.962370785373e-01, -7.927370449582e-01,
    -7.892325564252e-01, -7.857235773548e-01, -7.822100719236e-01, -7.786920040647e-01, -7.751693374653e-01,
    -7.716420355631e-01, -7.681100615437e-01, -7.645733783372e-01, -7.610319486149e-01, -7.574857347867e-01,
    -7.539346989970e-01, -7.503788031221e-01, -7.468180087665e-01, -7.432522772595e-01, -7.396815696519e-01,
    -7.361058467128e-01, -7.325250689251e-01, -7.289391964832e-01, -7.253481892884e-01, -7.217520069455e-01,
    -7.181506087592e-01, -7.145439537305e-01, -7.109320005520e-01, -7.073147076052e-01, -7.036920329555e-01,
    -7.000639343489e-01, -6.964303692075e-01, -6.927912946256e-01, -6.891466673656e-01, -6.854964438533e-01,
    -6.818405801742e-01, -6.781790320686e-01, -6.745117549277e-01, -6.708387037885e-01, -6.671598333297e-01,
    -6.634750978667e-01, -6.597844513474e-01, -6.560878473469e-01, -6.523852390629e-01, -6.486765793107e-01,
    -6.449618205183e-01, -6.412409147213e-01, -6.375138135577e-01, -6.337804682626e-01, -6.300408296631e-01,
    -6.262948481727e-01, -6.225424737860e-01, -6.187836560729e-01, -6.150183441733e-01, -6.112464867910e-01,
    -6.074680321881e-01, -6.036829281791e-01, -5.998911221244e-01, -5.960925609252e-01, -5.922871910161e-01,
    -5.884749583597e-01, -5.846558084397e-01, -5.808296862546e-01, -5.769965363111e-01, -5.731563026171e-01,
    -5.693089286751e-01, -5.654543574752e-01, -5.615925314881e-01, -5.577233926578e-01, -5.538468823943e-01,
    -5.499629415662e-01, -5.460715104931e-01, -5.421725289382e-01, -5.382659361001e-01, -5.343516706051e-01,
    -5.304296704989e-01, -5.264998732387e-01, -5.225622156847e-01, -5.186166340916e-01, -5.146630640997e-01,
    -5.107014407267e-01, -5.067316983582e-01, -5.027537707388e-01, -4.987675909629e-01, -4.947730914652e-01,
    -4.907702040110e-01, -4.867588596866e-01, -4.827389888894e-01, -4.787105213176e-01, -4.746733859599e-01,
    -4.706275110852e-01, -4.665728242319e-01, -4.625092521967e-01, -4.584367210240e-01, -4.543551559944e-01,
    -4.502644816132e-01, -4.461646215986e-01, -4.420554988702e-01, -4.379370355363e-01, -4.338091528822e-01,
    -4.296717713569e-01, -4.255248105610e-01, -4.213681892329e-01, -4.172018252360e-01, -4.130256355451e-01,
    -4.088395362323e-01, -4.046434424531e-01, -4.004372684319e-01, -3.962209274476e-01, -3.919943318182e-01,
    -3.877573928862e-01, -3.835100210025e-01, -3.792521255109e-01, -3.749836147319e-01, -3.707043959462e-01,
    -3.664143753777e-01, -3.621134581768e-01, -3.578015484027e-01, -3.534785490053e-01, -3.491443618076e-01,
    -3.447988874866e-01, -3.404420255546e-01, -3.360736743398e-01, -3.316937309665e-01, -3.273020913354e-01,
    -3.228986501023e-01, -3.184833006575e-01, -3.140559351046e-01, -3.096164442382e-01, -3.051647175217e-01,
    -3.007006430644e-01, -2.962241075985e-01, -2.917349964547e-01, -2.872331935384e-01, -2.827185813047e-01,
    -2.781910407327e-01, -2.736504512999e-01, -2.690966909555e-01, -2.645296360934e-01, -2.599491615242e-01,
    -2.553551404472e-01, -2.507474444212e-01, -2.461259433350e-01, -2.414905053771e-01, -2.368409970044e-01,
    -2.321772829111e-01, -2.274992259956e-01, -2.228066873282e-01, -2.180995261160e-01, -2.133775996692e-01,
    -2.086407633653e-01, -2.038888706122e-01, -1.991217728117e-01, -1.943393193209e-01, -1.895413574135e-01,
    -1.847277322393e-01, -1.798982867842e-01, -1.750528618273e-01, -1.701912958986e-01, -1.653134252348e-01,
    -1.604190837343e-01, -1.555081029108e-01, -1.505803118464e-01, -1.456355371428e-01, -1.406736028717e-01,
    -1.356943305236e-01, -1.306975389560e-01, -1.256830443392e-01, -1.206506601020e-01, -1.156001968746e-01,
    -1.105314624316e-01, -1.054442616318e-01, -1.003383963578e-01, -9.521366545353e-02, -9.006986465989e-02,
    -8.490678654895e-02, -7.972422045638e-02, -7.452195241202e-02, -6.929976506846e-02, -6.405743762795e-02,
    -5.879474576705e-02, -5.351146155935e-02, -4.820735339597e-02, -4.288218590396e-02, -3.753571986230e-02,
    -3.216771211561e-02, -2.677791548545e-02, -2.136607867885e-02, -1.593194619474e-02, -1.047525822712e-02,
    -4.995750565750e-03, 5.068455061201e-04, 6.032803317017e-03, 1.158240091565e-02, 1.715592118249e-02,
    2.275365194468e-02, 2.837588609437e-02, 3.402292171086e-02, 3.969506218599e-02, 4.539261635376e-02,
    5.111589862383e-02, 5.686522911908e-02, 6.264093381756e-02, 6.844334469884e-02, 7.427279989490e-02,
    8.012964384617e-02, 8.601422746196e-02, 9.192690828654e-02, 9.786805067048e-02, 1.038380259476e-01,
    1.098372126173e-01, 1.158659965340e-01, 1.219247711016e-01, 1.280139374750e-01, 1.341339047692e-01,
    1.402850902740e-01, 1.464679196770e-01, 1.526828272945e-01, 1.589302563095e-01, 1.652106590188e-01,
    1.715244970886e-01, 1.778722418188e-01, 1.842543744177e-01, 1.906713862852e-01, 1.971237793072e-01,
    2.036120661608e-01, 2.101367706303e-01, 2.166984279351e-01, 2.232975850697e-01, 2.299348011572e-01,
    2.366106478150e-01, 2.433257095352e-01, 2.500805840802e-01, 2.568758828923e-01, 2.637122315205e-01,
    2.705902700638e-01, 2.775106536316e-01, 2.844740528239e-01, 2.914811542292e-01, 2.985326609438e-01,
    3.056292931125e-01, 3.127717884912e-01, 3.199609030332e-01, 3.271974115003e-01, 3.344821081006e-01,
    3.418158071518e-01, 3.491993437751e-01, 3.566335746189e-01, 3.641193786133e-01, 3.716576577602e-01,
    3.792493379566e-01, 3.868953698579e-01, 3.945967297774e-01, 4.023544206300e-01, 4.101694729184e-01,
    4.180429457668e-01, 4.259759280021e-01, 4.339695392896e-01, 4.420249313201e-01, 4.501432890584e-01,
    4.583258320512e-01, 4.665738158020e-01, 4.748885332134e-01, 4.832713161060e-01, 4.917235368112e-01,
    5.002466098504e-01, 5.088419937014e-01, 5.175111926575e-01, 5.262557587901e-01, 5.350772940118e-01,
    5.439774522597e-01, 5.529579417952e-01, 5.620205276348e-01, 5.711670341207e-01, 5.803993476345e-01,
    5.897194194743e-01, 5.991292688986e-01, 6.086309863514e-01, 6.182267368820e-01, 6.279187637767e-01,
    6.377093924100e-01, 6.476010343415e-01, 6.575961916713e-01, 6.676974616741e-01, 6.779075417398e-01,
    6.882292346337e-01, 6.986654541145e-01, 7.092192309307e-01, 7.198937192314e-01, 7.306922034219e-01,
    7.416181055076e-01, 7.526749929641e-01, 7.638665871801e-01, 7.751967725284e-01, 7.866696061139e-01,
    7.982893282689e-01, 8.100603738610e-01, 8.219873844906e-01, 8.340752216653e-01, 8.463289810469e-01,
    8.587540078753e-01, 8.713559136923e-01, 8.841405944953e-01, 8.971142504742e-01, 9.102834074987e-01,
    9.236549405467e-01, 9.372360992881e-01, 9.510345360695e-01, 9.650583365741e-01, 9.793160534697e-01,
    9.938167434062e-01, 1.008570007769e+00, 1.023586037659e+00, 1.038875663633e+00, 1.054450410832e+00,
    1.070322560213e+00, 1.086505216709e+00, 1.103012385292e+00, 1.119859056070e+00, 1.137061299725e+00,
    1.154636374865e+00, 1.172602849108e+00, 1.190980736079e+00, 1.209791650904e+00, 1.229058987281e+00,
    1.248808119854e+00, 1.269066636353e+00, 1.289864604948e+00, 1.311234883425e+00, 1.333213478349e+00,
    1.355839964232e+00, 1.379157975224e+00, 1.403215784953e+00, 1.428066994261e+00, 1.453771351949e+00,
    1.480395740719e+00, 1.508015370072e+00, 1.536715230724e+00, 1.566591882753e+00, 1.597755674125e+00,
    1.630333520646e+00, 1.664472427528e+00, 1.700344004298e+00, 1.738150330633e+00, 1.778131691016e+00,
    1.820576944140e+00, 1.865837687358e+00, 1.914348021697e+00, 1.966652815009e+00, 2.023449281380e+00,
    2.085650227410e+00, 2.154484165870e+00, 2.231661649118e+00, 2.319668772316e+00, 2.422326585896e+00,
    2.545972709811e+00, 2.702346657255e+00, 2.917407271897e+00, 3.272196059002e+00,
])

CDF_START = -10.0
CDF_STEP = 0.02
CDF_COUNT = 801

CDF_VALUES = np.array([
    1.629796281165e-11, 1.674130163897e-11, 1.718489024895e-11, 1.762763787105e-11, 1.806845827843e-11,
    1.850627507846e-11, 1.894002724532e-11, 1.936867491977e-11, 1.979120544866e-11, 2.020663968503e-11,
    2.061403852295e-11, 2.101250968455e-11, 2.140121475576e-11, 2.177937645622e-11, 2.214628616019e-11,
    2.250131166722e-11, 2.284390522374e-11, 2.317361179284e-11, 2.349007760186e-11, 2.379305895347e-11,
    2.408243132847e-11, 2.435819876991e-11, 2.462050361304e-11, 2.486963651611e-11, 2.510604686282e-11,
    2.533035354086e-11, 2.554335611296e-11, 2.574604643689e-11, 2.593962073137e-11, 2.612549214402e-11,
    2.630530383808e-11, 2.648094267165e-11, 2.665455342521e-11, 2.682855374434e-11, 2.700564967939e-11,
    2.718885198675e-11, 2.738149319340e-11, 2.758724540729e-11, 2.781013898746e-11, 2.805458205837e-11,
    2.832538091404e-11, 2.862776132554e-11, 2.896739077790e-11, 2.935040165719e-11, 2.978341539367e-11,
    3.027356755263e-11, 3.082853386145e-11, 3.145655719411e-11, 3.216647545490e-11, 3.296775028415e-11,
    3.387049666622e-11, 3.488551319750e-11, 3.602431314291e-11, 3.729915599982e-11, 3.872307962226e-11,
    4.030993267224e-11, 4.207440733184e-11, 4.403207215172e-11, 4.619940473513e-11, 4.859382426955e-11,
    5.123372354972e-11, 5.413850032940e-11, 5.732858779192e-11, 6.082548389710e-11, 6.465177928210e-11,
    6.883118349547e-11, 7.338854927122e-11, 7.834989448165e-11, 8.374242160126e-11, 8.959453418260e-11,
    9.593585013474e-11, 1.027972114171e-10, 1.102106899699e-10, 1.182095892374e-10, 1.268284413437e-10,
    1.361029993227e-10, 1.460702242301e-10, 1.567682668926e-10, 1.682364439642e-10, 1.805152080276e-10,
    1.936461118503e-10, 2.076717661826e-10, 2.226357915346e-10, 2.385827634216e-10, 2.555581515732e-10,
    2.736082530118e-10, 2.927801191303e-10, 3.131214775569e-10, 3.346806486177e-10, 3.575064577712e-10,
    3.816481441520e-10, 4.071552666048e-10, 4.340776082201e-10, 4.624650807160e-10, 4.923676306533e-10,
    5.238351491332e-10, 5.569173874822e-10, 5.916638815875e-10, 6.281238882241e-10, 6.663463366370e-10,
    7.063798002585e-10, 7.482724925493e-10, 7.920722933820e-10, 8.378268119440e-10, 8.855834936285e-10,
    9.353897789583e-10, 9.872933250931e-10, 1.041342299498e-09, 1.097585759573e-09, 1.156074131528e-09,
    1.216859805342e-09, 1.279997863821e-09, 1.345546967159e-09, 1.413570416491e-09, 1.484137423934e-09,
    1.557324619622e-09, 1.633217831395e-09, 1.711914175774e-09, 1.793524506300e-09, 1.878176270212e-09,
    1.966016830774e-09, 2.057217321510e-09, 2.151977105520e-09, 2.250528925740e-09, 2.353144837894e-09,
    2.460143037041e-09, 2.571895694603e-09, 2.688837945373e-09, 2.811478175970e-09, 2.940409789083e-09,
    3.076324636890e-09, 3.220028343071e-09, 3.372457759523e-09, 3.534700831756e-09, 3.708019185958e-09,
    3.893873778353e-09, 4.093954001973e-09, 4.310210679475e-09, 4.544893427676e-09, 4.800592938758e-09,
    5.080288779987e-09, 5.387403381209e-09, 5.725862970218e-09, 6.100166277919e-09, 6.515461951618e-09,
    6.977635698311e-09, 7.493408302120e-09, 8.070445787295e-09, 8.717483118058e-09, 9.444463000551e-09,
    1.026269149090e-08, 1.118501230347e-08, 1.222600192059e-08, 1.340218778207e-08, 1.473229212391e-08,
    1.623750422158e-08, 1.794178412250e-08, 1.987220123538e-08, 2.205931145489e-08, 2.453757688444e-08,
    2.734583257443e-08, 3.052780513404e-08, 3.413268849838e-08, 3.821578265239e-08, 4.283920159442e-08,
    4.807265742714e-08, 5.399432805302e-08, 6.069181659850e-08, 6.826321141295e-08, 7.681825622818e-08,
    8.647964088288e-08, 9.738442387494e-08, 1.096855989200e-07, 1.235538187227e-07, 1.391792901485e-07,
    1.567738562272e-07, 1.765732814346e-07, 1.988397581766e-07, 2.238646535907e-07, 2.519715172500e-07,
    2.835193719425e-07, 3.189063111886e-07, 3.585734289093e-07, 4.030091084291e-07, 4.527536998874e-07,
    5.084046170710e-07, 5.706218867684e-07, 6.401341859258e-07, 7.177454041675e-07, 8.043417715592e-07,
    9.008995940487e-07, 1.008493641577e-06, 1.128306236465e-06, 1.261637092656e-06, 1.409913959019e-06,
    1.574704123201e-06, 1.757726835420e-06, 1.960866714740e-06, 2.186188203913e-06, 2.435951141894e-06,
    2.712627526857e-06, 3.018919545939e-06, 3.357778951523e-06, 3.732427867566e-06, 4.146381113311e-06,
    4.603470135109e-06, 5.107868641271e-06, 5.664120038506e-06, 6.277166772120e-06, 6.952381676471e-06,
    7.695601445207e-06, 8.513162335213e-06, 9.411938221886e-06, 1.039938112599e-05, 1.148356433733e-05,
    1.267322826270e-05, 1.397782912933e-05, 1.540759067805e-05, 1.697355898328e-05, 1.868766053971e-05,
    2.056276375776e-05, 2.261274401220e-05, 2.485255239043e-05, 2.729828828794e-05, 2.996727600004e-05,
    3.287814545954e-05, 3.605091727045e-05, 3.950709218779e-05, 4.326974519261e-05, 4.736362431076e-05,
    5.181525432160e-05, 5.665304550114e-05, 6.190740754076e-05, 6.761086877914e-05, 7.379820088122e-05,
    8.050654909190e-05, 8.777556818776e-05, 9.564756424255e-05, 1.041676423148e-04, 1.133838601589e-04,
    1.233473880493e-04, 1.341126748013e-04, 1.457376200564e-04, 1.582837528924e-04, 1.718164168030e-04,
    1.864049610787e-04, 2.021229386068e-04, 2.190483100895e-04, 2.372636546677e-04, 2.568563869144e-04,
    2.779189801462e-04, 3.005491959821e-04, 3.248503200556e-04, 3.509314037659e-04, 3.789075119322e-04,
    4.088999761892e-04, 4.410366539402e-04, 4.754521926569e-04, 5.122882992895e-04, 5.516940145248e-04,
    5.938259916019e-04, 6.388487793659e-04, 6.869351092141e-04, 7.382661855559e-04, 7.930319793829e-04,
    8.514315245119e-04, 9.136732160336e-04, 9.799751104733e-04, 1.050565227133e-03, 1.125681850058e-03,
    1.205573830048e-03, 1.290500886076e-03, 1.380733905489e-03, 1.476555242302e-03, 1.578259012874e-03,
    1.686151388253e-03, 1.800550882401e-03, 1.921788635537e-03, 2.050208691775e-03, 2.186168270214e-03,
    2.330038028641e-03, 2.482202318946e-03, 2.643059433366e-03, 2.813021840634e-03, 2.992516411097e-03,
    3.181984629876e-03, 3.381882797075e-03, 3.592682214112e-03, 3.814869355170e-03, 4.048946022790e-03,
    4.295429486649e-03, 4.554852604508e-03, 4.827763924381e-03, 5.114727766938e-03, 5.416324287189e-03,
    5.733149514491e-03, 6.065815369954e-03, 6.414949660320e-03, 6.781196047421e-03, 7.165213992360e-03,
    7.567678673552e-03, 7.989280877831e-03, 8.430726863831e-03, 8.892738196922e-03, 9.376051554983e-03,
    9.881418504366e-03, 1.040960524545e-02, 1.096139232720e-02, 1.153757433029e-02, 1.213895951824e-02,
    1.276636945630e-02, 1.342063859760e-02, 1.410261383652e-02, 1.481315402881e-02, 1.555312947859e-02,
    1.632342139197e-02, 1.712492129741e-02, 1.795853043296e-02, 1.882515910035e-02, 1.972572598637e-02,
    2.066115745180e-02, 2.163238678822e-02, 2.264035344328e-02, 2.368600221495e-02, 2.477028241537e-02,
    2.589414700510e-02, 2.705855169848e-02, 2.826445404110e-02, 2.951281246020e-02, 3.080458528925e-02,
    3.214072976761e-02, 3.352220101668e-02, 3.494995099366e-02, 3.642492742438e-02, 3.794807271657e-02,
    3.952032285505e-02, 4.114260628045e-02, 4.281584275306e-02, 4.454094220345e-02, 4.631880357166e-02,
    4.815031363674e-02, 5.003634583846e-02, 5.197775909304e-02, 5.397539660497e-02, 5.603008467676e-02,
    5.814263151863e-02, 6.031382606021e-02, 6.254443676638e-02, 6.483521045911e-02, 6.718687114764e-02,
    6.960011886890e-02, 7.207562854037e-02, 7.461404882754e-02, 7.721600102790e-02, 7.988207797370e-02,
    8.261284295547e-02, 8.540882866847e-02, 8.827053618388e-02, 9.119843394692e-02, 9.419295680386e-02,
    9.725450505965e-02, 1.003834435683e-01, 1.035801008576e-01, 1.068447682901e-01, 1.101776992621e-01,
    1.135791084422e-01, 1.170491710509e-01, 1.205880221829e-01, 1.241957561736e-01, 1.278724260112e-01,
    1.316180427952e-01, 1.354325752430e-01, 1.393159492459e-01, 1.432680474743e-01, 1.472887090347e-01,
    1.513777291783e-01, 1.555348590618e-01, 1.597598055615e-01, 1.640522311416e-01, 1.684117537756e-01,
    1.728379469231e-01, 1.773303395607e-01, 1.818884162680e-01, 1.865116173678e-01, 1.911993391221e-01,
    1.959509339814e-01, 2.007657108891e-01, 2.056429356393e-01, 2.105818312882e-01, 2.155815786177e-01,
    2.206413166522e-01, 2.257601432254e-01, 2.309371155981e-01, 2.361712511258e-01, 2.414615279742e-01,
    2.468068858817e-01, 2.522062269691e-01, 2.576584165927e-01, 2.631622842414e-01, 2.687166244762e-01,
    2.743201979092e-01, 2.799717322222e-01, 2.856699232218e-01, 2.914134359312e-01, 2.972009057144e-01,
    3.030309394332e-01, 3.089021166345e-01, 3.148129907652e-01, 3.207620904141e-01, 3.267479205781e-01,
    3.327689639502e-01, 3.388236822293e-01, 3.449105174469e-01, 3.510278933118e-01, 3.571742165677e-01,
    3.633478783643e-01, 3.695472556381e-01, 3.757707125018e-01, 3.820166016400e-01, 3.882832657085e-01,
    3.945690387369e-01, 4.008722475306e-01, 4.071912130715e-01, 4.135242519148e-01, 4.198696775805e-01,
    4.262258019376e-01, 4.325909365786e-01, 4.389633941835e-01, 4.453414898705e-01, 4.517235425326e-01,
    4.581078761577e-01, 4.644928211316e-01, 4.708767155207e-01, 4.772579063344e-01, 4.836347507658e-01,
    4.900056174076e-01, 4.963688874438e-01, 5.027229558147e-01, 5.090662323552e-01, 5.153971429037e-01,
    5.217141303814e-01, 5.280156558418e-01, 5.343001994874e-01, 5.405662616548e-01, 5.468123637661e-01,
    5.530370492465e-01, 5.592388844068e-01, 5.654164592913e-01, 5.715683884891e-01, 5.776933119092e-01,
    5.837898955197e-01, 5.898568320489e-01, 5.958928416493e-01, 6.018966725248e-01, 6.078671015191e-01,
    6.138029346670e-01, 6.197030077078e-01, 6.255661865606e-01, 6.313913677626e-01, 6.371774788686e-01,
    6.429234788145e-01, 6.486283582429e-01, 6.542911397921e-01, 6.599108783487e-01, 6.654866612637e-01,
    6.710176085341e-01, 6.765028729477e-01, 6.819416401951e-01, 6.873331289462e-01, 6.926765908941e-01,
    6.979713107662e-01, 7.032166063026e-01, 7.084118282038e-01, 7.135563600473e-01, 7.186496181745e-01,
    7.236910515484e-01, 7.286801415829e-01, 7.336164019450e-01, 7.384993783301e-01, 7.433286482113e-01,
    7.481038205646e-01, 7.528245355692e-01, 7.574904642857e-01, 7.621013083113e-01, 7.666567994144e-01,
    7.711566991486e-01, 7.756007984476e-01, 7.799889172015e-01, 7.843209038155e-01, 7.885966347529e-01,
    7.928160140610e-01, 7.969789728843e-01, 8.010854689619e-01, 8.051354861140e-01, 8.091290337151e-01,
    8.130661461572e-01, 8.169468823021e-01, 8.207713249250e-01, 8.245395801498e-01, 8.282517768766e-01,
    8.319080662029e-01, 8.355086208387e-01, 8.390536345167e-01, 8.425433213985e-01, 8.459779154770e-01,
    8.493576699765e-01, 8.526828567507e-01, 8.559537656793e-01, 8.591707040646e-01, 8.623339960277e-01,
    8.654439819057e-01, 8.685010176508e-01, 8.715054742306e-01, 8.744577370321e-01, 8.773582052681e-01,
    8.802072913876e-01, 8.830054204909e-01, 8.857530297492e-01, 8.884505678291e-01, 8.910984943241e-01,
    8.936972791908e-01, 8.962474021927e-01, 8.987493523507e-01, 9.012036274012e-01, 9.036107332614e-01,
    9.059711835032e-01, 9.082854988356e-01, 9.105542065947e-01, 9.127778402443e-01, 9.149569388839e-01,
    9.170920467677e-01, 9.191837128319e-01, 9.212324902327e-01, 9.232389358940e-01, 9.252036100647e-01,
    9.271270758875e-01, 9.290098989763e-01, 9.308526470062e-01, 9.326558893119e-01, 9.344201964986e-01,
    9.361461400621e-01, 9.378342920206e-01, 9.394852245568e-01, 9.410995096710e-01, 9.426777188445e-01,
    9.442204227142e-01, 9.457281907579e-01, 9.472015909897e-01, 9.486411896668e-01, 9.500475510060e-01,
    9.514212369115e-01, 9.527628067127e-01, 9.540728169118e-01, 9.553518209427e-01, 9.566003689391e-01,
    9.578190075129e-01, 9.590082795420e-01, 9.601687239691e-01, 9.613008756081e-01, 9.624052649619e-01,
    9.634824180478e-01, 9.645328562335e-01, 9.655570960809e-01, 9.665556491990e-01, 9.675290221063e-01,
    9.684777161001e-01, 9.694022271354e-01, 9.703030457113e-01, 9.711806567655e-01, 9.720355395763e-01,
    9.728681676724e-01, 9.736790087499e-01, 9.744685245971e-01, 9.752371710248e-01, 9.759853978054e-01,
    9.767136486167e-01, 9.774223609935e-01, 9.781119662849e-01, 9.787828896174e-01, 9.794355498646e-01,
    9.800703596216e-01, 9.806877251855e-01, 9.812880465414e-01, 9.818717173530e-01, 9.824391249580e-01,
    9.829906503692e-01, 9.835266682790e-01, 9.840475470692e-01, 9.845536488244e-01, 9.850453293500e-01,
    9.855229381936e-01, 9.859868186702e-01, 9.864373078915e-01, 9.868747367977e-01, 9.872994301932e-01,
    9.877117067851e-01, 9.881118792247e-01, 9.885002541518e-01, 9.888771322416e-01, 9.892428082538e-01,
    9.895975710848e-01, 9.899417038212e-01, 9.902754837959e-01, 9.905991826460e-01, 9.909130663730e-01,
    9.912173954035e-01, 9.915124246528e-01, 9.917984035891e-01, 9.920755762995e-01, 9.923441815569e-01,
    9.926044528883e-01, 9.928566186441e-01, 9.931009020678e-01, 9.933375213675e-01, 9.935666897874e-01,
    9.937886156799e-01, 9.940035025788e-01, 9.942115492725e-01, 9.944129498777e-01, 9.946078939136e-01,
    9.947965663762e-01, 9.949791478127e-01, 9.951558143957e-01, 9.953267379985e-01, 9.954920862690e-01,
    9.956520227045e-01, 9.958067067258e-01, 9.959562937514e-01, 9.961009352712e-01, 9.962407789202e-01,
    9.963759685512e-01, 9.965066443081e-01, 9.966329426977e-01, 9.967549966620e-01, 9.968729356488e-01,
    9.969868856828e-01, 9.970969694359e-01, 9.972033062961e-01, 9.973060124366e-01, 9.974052008841e-01,
    9.975009815858e-01, 9.975934614764e-01, 9.976827445436e-01, 9.977689318936e-01, 9.978521218151e-01,
    9.979324098432e-01, 9.980098888213e-01, 9.980846489638e-01, 9.981567779161e-01, 9.982263608155e-01,
    9.982934803499e-01, 9.983582168160e-01, 9.984206481769e-01, 9.984808501186e-01, 9.985388961054e-01,
    9.985948574345e-01, 9.986488032897e-01, 9.987008007944e-01, 9.987509150633e-01, 9.987992092533e-01,
    9.988457446136e-01, 9.988905805346e-01, 9.989337745964e-01, 9.989753826159e-01, 9.990154586929e-01,
    9.990540552558e-01, 9.990912231061e-01, 9.991270114620e-01, 9.991614680011e-01, 9.991946389020e-01,
    9.992265688859e-01, 9.992573012562e-01, 9.992868779376e-01, 9.993153395151e-01, 9.993427252709e-01,
    9.993690732216e-01, 9.993944201536e-01, 9.994188016586e-01, 9.994422521677e-01, 9.994648049845e-01,
    9.994864923186e-01, 9.995073453165e-01, 9.995273940936e-01, 9.995466677641e-01, 9.995651944707e-01,
    9.995830014137e-01, 9.996001148791e-01, 9.996165602660e-01, 9.996323621138e-01, 9.996475441277e-01,
    9.996621292046e-01, 9.996761394580e-01, 9.996895962415e-01, 9.997025201733e-01, 9.997149311583e-01,
    9.997268484106e-01, 9.997382904754e-01, 9.997492752499e-01, 9.997598200040e-01, 9.997699414001e-01,
    9.997796555126e-01, 9.997889778467e-01, 9.997979233571e-01, 9.998065064653e-01, 9.998147410774e-01,
    9.998226406007e-01, 9.998302179602e-01, 9.998374856142e-01, 9.998444555701e-01, 9.998511393993e-01,
    9.998575482514e-01, 9.998636928689e-01, 9.998695836003e-01, 9.998752304137e-01, 9.998806429097e-01,
    9.998858303339e-01, 9.998908015886e-01, 9.998955652454e-01, 9.999001295556e-01, 9.999045024620e-01,
    9.999086916092e-01, 9.999127043542e-01, 9.999165477761e-01, 9.999202286863e-01, 9.999237536374e-01,
    9.999271289327e-01, 9.999303606350e-01, 9.999334545747e-01, 9.999364163588e-01, 9.999392513783e-01,
    9.999419648162e-01, 9.999445616548e-01, 9.999470466833e-01, 9.999494245045e-01, 9.999516995416e-01,
    9.999538760448e-01, 9.999559580977e-01, 9.999579496234e-01, 9.999598543902e-01, 9.999616760176e-01,
    9.999634179818e-01, 9.999650836206e-01, 9.999666761391e-01, 9.999681986144e-01, 9.999696540006e-01,
    9.999710451329e-01, 9.999723747329e-01, 9.999736454121e-01, 9.999748596765e-01, 9.999760199309e-01,
    9.999771284820e-01, 9.999781875427e-01, 9.999791992357e-01, 9.999801655967e-01, 9.999810885781e-01,
    9.999819700519e-01, 9.999828118129e-01, 9.999836155820e-01, 9.999843830088e-01, 9.999851156742e-01,
    9.999858150937e-01, 9.999864827194e-01, 9.999871199429e-01, 9.999877280974e-01, 9.999883084601e-01,
    9.999888622548e-01, 9.999893906532e-01, 9.999898947780e-01, 9.999903757040e-01, 9.999908344606e-01,
    9.999912720333e-01, 9.999916893657e-01, 9.999920873609e-01, 9.999924668835e-01, 9.999928287611e-01,
    9.999931737855e-01, 9.999935027145e-01, 9.999938162731e-01, 9.999941151551e-01, 9.999944000240e-01,
    9.999946715146e-01, 9.999949302342e-01, 9.999951767632e-01, 9.999954116571e-01, 9.999956354467e-01,
    9.999958486396e-01, 9.999960517212e-01, 9.999962451553e-01, 9.999964293855e-01, 9.999966048354e-01,
    9.999967719100e-01, 9.999969309965e-01, 9.999970824645e-01, 9.999972266673e-01, 9.999973639424e-01,
    9.999974946122e-01, 9.999976189846e-01, 9.999977373536e-01, 9.999978500001e-01, 9.999979571922e-01,
    9.999980591859e-01,
])

