#include "debyedec/selftest.hpp"

#include <cmath>
#include <cstddef>
#include <span>

#include "debyedec/diagnostics.hpp"
#include "debyedec/special_functions.hpp"

namespace debyedec {

namespace {

// Reference values in this file were computed once with an independent
// high-precision implementation and are frozen; the library must keep
// reproducing them.

struct CdfPoint {
    double x;
    double expected;
};

const CdfPoint kNormalTable[] = {
    {0.0, 0.5},
    {0.5, 0.6914624612740131},
    {-0.5, 0.3085375387259869},
    {1.0, 0.8413447460685429},
    {-1.0, 0.15865525393145705},
    {1.5, 0.9331927987311419},
    {-1.5, 0.06680720126885807},
    {1.959964, 0.9750000009035577},
    {-1.959964, 0.0249999990964424},
    {2.0, 0.9772498680518208},
    {-2.5, 0.006209665325776135},
    {3.0, 0.9986501019683699},
    {-3.0, 0.0013498980316300946},
    {4.0, 0.9999683287581669},
    {-4.0, 3.1671241833119924e-05},
    {5.0, 0.9999997133484281},
    {-5.0, 2.866515718791939e-07},
    {6.0, 0.9999999990134123},
    {-6.0, 9.86587645037698e-10},
    {0.123456789, 0.5491273050781421},
};

struct TPoint {
    double x;
    int df;
    double expected;
};

const TPoint kTTable[] = {
    {0.0, 1, 0.5},
    {1.0, 1, 0.75},
    {-1.0, 1, 0.25},
    {2.0, 1, 0.8524163823495667},
    {0.5, 2, 0.6666666666666666},
    {-2.5, 2, 0.0648058601107554},
    {3.4641016151377544, 2, 0.9629100498862757},
    {1.0, 3, 0.8044988905221147},
    {-1.5, 4, 0.104},
    {2.0, 5, 0.9490302605850708},
    {0.7, 7, 0.7467412239022001},
    {-0.3, 10, 0.3851603037828993},
    {1.96, 10, 0.9607818798761502},
    {2.5, 15, 0.9877470983767431},
    {-3.0, 20, 0.003537949395605548},
    {1.2, 30, 0.8802348245551688},
    {0.8, 50, 0.7862522810908136},
    {-1.645, 100, 0.05155488258752319},
    {1.96, 1000, 0.9748634075221256},
    {1.96, 1000000, 0.9750019662073651},
};

struct FPoint {
    double x;
    int d1;
    int d2;
    double expected;
};

const FPoint kFTable[] = {
    {0.0, 1, 1, 0.0},
    {1.0, 1, 1, 0.5},
    {0.5, 2, 3, 0.350480947161671},
    {1.0, 5, 5, 0.5},
    {2.0, 3, 7, 0.7973063575133491},
    {4.0, 10, 10, 0.98041856},
    {0.25, 8, 4, 0.04526748971193416},
    {1.5, 6, 12, 0.7413711245193025},
    {3.0, 2, 20, 0.9274618497135942},
    {5.0, 15, 5, 0.9575028636134242},
    {0.9, 30, 30, 0.3874076593890768},
    {1.0, 394, 394, 0.5},
    {2.2, 50, 25, 0.9823822210801818},
    {0.1, 1, 10, 0.24166846428882624},
    {10.0, 4, 4, 0.976709241172051},
    {1.05, 200, 200, 0.6347838443927973},
    {0.7, 12, 8, 0.2784909411777329},
    {6.0, 20, 2, 0.8476452910851324},
    {2.5, 7, 3, 0.7575024717552998},
    {1.8, 100, 50, 0.9885521733769371},
};

const double kSample0[] = {
    -0.20470765948471295, 0.47894333805754824, -0.5194387150567381, -0.55573030434749,
    1.9657805725027142, 1.3934058329729904, 0.09290787674371767, 0.2817461528302025,
    0.7690225676118387, 1.2464347363862822, 1.0071893575830049, -1.2962211091122635,
    0.274991633432124, 0.22891287893531592, 1.3529168351654497, 0.8864293405915888,
    -2.0016373096603974, -0.3718425371402544, 1.6690253095248706, -0.4385697358355719,
    -0.5397414455216628, 0.4769850104122995, 3.248943919430755, -1.0212275243555968,
    -0.5770873030407672, 0.12412127567340774, 0.3026135619125114, 0.5237720681504165,
    0.0009402777753328851, 1.3438097936141322, -0.7135439850963832, -0.831153538853914,
    -2.3702316539567447, -1.8607607885507347, -0.8607573984317486, 0.5601452930280342,
    -1.2659344916936925, 0.11982712466055132, -1.0635124480535407, 0.3328827156076713,
};

const double kSample1[] = {
    -0.020746592612009174, -0.24531009233354872, 0.6972028239555577, 0.8221944572633453,
    -0.23230255768542296, -0.36900819320775224, 0.1367883055908481, -0.6243639299512005,
    -0.7483169123452595, 0.37519161008898383, 0.5992134358948038, 0.1470731303972863,
    0.9464599631989699, 0.2681087542749572, 0.7768434496228536, -0.009170482485071352,
    -0.2967669402195756, 0.4284607370890412, 0.007858232895830985, -0.5487247869587211,
    -0.5100511195162718, 0.5856014000991812, -0.009655170977261873, 0.8301873467995529,
    0.8907436677500356, 0.06646445931043155, -0.49501481088514665, 0.4417241163496959,
    -0.2651224724108454, -0.002703114177893484,
};

const double kSample2[] = {
    -1.5008256079145263, 1.7902717599264812, 1.4626973026705332, 2.4780230074402136,
    0.11292579259040329, 0.30075369600699947, -0.7973462898963881, -0.4283179525885083,
    0.09893109858497078, 0.9114317975011695, 0.19859579874463035, -0.10619476035813397,
    -0.061479859677710975, 0.7650153155485062, -0.4918836251864299, -1.0844026785800245,
    0.27418571404794534, -0.6252800828973009, 0.29876578066016773, -0.29950800754198,
    -4.68776568498989, 0.8638929616102837, 1.8448125228124919, 0.3825390036636954,
    0.8074583425831091, -0.16001604702983505, 0.58968758836126, -1.3138276250898056,
    1.3008340207670404, -1.526694109416192, -0.06989249371979953, -0.4446066732912743,
    1.7696303371128703, 1.7132208501878987, -1.357880774929424,
};

const double kSample3[] = {
    0.0, 0.6154746681181885, -1.1696208165664386, -1.1692494005564709,
    -2.0561603963327384, -2.0758273393815267, -1.791423560092249, 0.16716391512505613,
    -0.14928143961697965, 1.793703438540988, 1.975242192108492, 0.4814434696782859,
    1.7759208452816082, 2.092773677094626, 0.9495772194398333, 1.0077699956067288,
    1.0081633898885465, 0.09939426841159915, -1.0637225939335813, -0.11129402995161208,
    -0.0871452413907138, 1.1969969605643522, 0.9597095654791666, 0.6744996516719513,
    -0.38244244608175476, 0.6647145400586366, 0.5045583517694521, 1.086757903604492,
    0.39698645777711977, -0.34828541207428904, -0.08992367950182702, -0.18975397524493606,
    -0.4621423117829403, 1.0503527119435558, 0.0057188200807593015, 0.14678152529402172,
    1.2147980116513095, -0.1744722434593221, -1.7941303039585579, -0.5288598996737074,
    0.03968176952505914, 0.8840372590851026, -0.5866159384392492, -0.8355468118783352,
    0.9676721024238051,
};

const double kSample4[] = {
    -1.2137438372056342, -0.10351825330354036, -1.076256863968538, -1.0817546636074997,
    -0.9598091434249143, -1.2528067315556963, 4.135353348870654, 1.704126233627472,
    1.912219358816952, -1.2712942782588599, -1.1186316840002193, -0.9755131489446776,
    -0.9000354885274705, -1.1688786353841616, -1.1660911327012604, 0.6648100619577182,
    -0.342820285415381, 0.4081670952907763, 0.8380436618868972, -1.2884516614556936,
    -1.4054105676017978, 2.0081496498257025, -0.36177110202857454, 1.4391474037596348,
    -1.0822695618342766,
};

const double kSample5[] = {
    0.4546810840624938, 0.011307263621087082, -0.284317036663075, -0.1125099859151969,
    -1.0222047452119596, 0.2235070983264854, -0.07596050152697359, 0.23369537403511398,
    1.028649852319267, 0.6047559223175549, 0.053110371511918636, 0.9199899411415207,
    0.23213892988143367, 1.0150209029791533, -0.12342622566405037, 0.6016410650231518,
    0.931786128238046, 0.17225472191896604, 0.07715581006376637, 0.5341833406177884,
    -0.18080196217351224, -0.6122522686261287, 0.6127140782487687, 0.8114361921507833,
    0.8537123003844129, 0.34546854473248007, 0.12494567162492548, 0.4089785082397782,
    -0.14740656524954127, -0.5707469773611082, -0.22612786978479665, 1.018301392897765,
    0.011896306821681413, -0.9101472145437732, -0.23116481415229212, 0.4186861307791213,
    0.30047868453198356, 0.3326265904199455, -0.38376205250774614, 0.28485997406287183,
    0.7702446606978535, -0.021218375252389732, 0.8200896229474994, -0.24146112783428347,
    0.5146067941673012, 0.1818881657408704, 0.6209089081302452, 0.1341697216505809,
    0.997036113092503, -0.23837097202036478, 0.20376700901909683, -0.1355938253508533,
    0.5104259984527502, -0.30570553333106226, 0.17056654394221463, 0.009176574971769713,
    -0.330210313824774, 0.5322873967494364, -0.2351204537658474, 0.702111348919398,
};

const double kSample6[] = {
    -0.31347101543922534, 4.0207800224003645, -1.774208860768888, -1.955872464703298,
    -0.5344346990530044, 0.9666756437553636, -0.8006654667753282, 0.8997608303076781,
    0.799187906828414, -0.3031496074938767, -5.115868112005538, 0.3216136819962027,
    0.15305013549580998, -0.5944083321234841, -2.5885480474195264, -1.7703600255605723,
    -0.37499305220358137, -0.9871199996892048, -0.23082592795848655, -0.7014892149732183,
};

const double kSample7[] = {
    0.013409212908763153, 0.37489079245098994, 1.2527117807372177, 0.5178538172028415,
    -0.4487026612829018, -0.008408170644264135, -1.1317164298159328, -0.867377635083688,
    -0.7623756871844949, 0.1210605435353953, 0.28793288727074184, 1.1594916754663176,
    0.8726172719196559, 0.2514411641370103, 0.03843871263850379, -0.47460583976711196,
    -1.095173725688143, -0.35834024963235644, 0.5577931269502664, 0.2464959190331853,
    0.8771348982708232, 0.7420006311534694, 0.41713709614700306, -0.32537301514641653,
    -0.49057757230697646, -1.6550025831894062, -0.8793264055667427, -0.09326656137700337,
    0.9961189693592183, 1.269950931183548, 0.8024105963479524, 0.40879338408651317,
};

const double kSample8[] = {
    0.008845180751880746, -0.06347884915092405, 0.01587556327634702, -0.05882449435952983,
    0.19287462914810183, 0.12096046787673002, -0.0305434278024636, 0.05004283669133887,
    0.18928518781917705, -0.03369717961332359, -0.11304894233851003, 0.012749723429924874,
    0.11030130807590223, -0.16094023608795427, -0.034412594485630714, -0.09164140242483103,
    -0.00963858140990263, -0.16957185565808974, -0.13748935557989392, 0.24139990881141912,
    -0.08893073985408187, -0.09516526358784422, 0.043628096102532044, -0.13576441584908652,
    0.0414679924047751, 0.08213911143983678, 0.04682724919160634, -0.10095354824548548,
    -0.11081245732395915, 0.1312289392595227, -0.010488256800241616, 0.09846685452049031,
    0.0437032934414858, -0.07392745868316788, -0.025510099292744913, -0.13359257878505373,
    -0.037050625442190614, -0.13580872671009256, 0.09045991369136243, 0.04342380999868958,
    0.1059683354764016, 0.07649307759123525, -0.06344459381625638, -0.10796028596048408,
    -0.08948382299739052, 0.1026374045825477, 0.025727864875404394, -0.008430137451226841,
};

const double kSample9[] = {
    1.3484647302088573, -1.4111555378946723, -0.6507460371266152, 1.986138307929576,
    1.8382716641267218, -0.5276283485812809, 2.701898097285115, 0.3566603833075339,
    -0.8749150341376262, -0.19215975401953234, 0.5069175077566617, -0.5673469097252954,
    -0.23605572446224254, 3.289442688502195, -1.6548210114083006, -0.19262476727009803,
    11.616988996341728, -0.7613281076213303, -0.15828785207548202, -0.5208182649526409,
    0.30638805586789797, 0.1702101641054088, -0.3463580772065926, 0.3281785038155709,
    -0.06900347101383164, -1.044036143752904, -0.9617279186181835, -1.3020139798223718,
};

struct DiagnosticsReference {
    std::span<const double> sample;
    double ad_statistic;
    double ad_p;
    double t_statistic;
    double t_p;
    double dw[5];
    double f_statistic;
    double f_p;
};

const DiagnosticsReference kDiagnostics[] = {
    {kSample0, 0.19529637499501717, 0.8853954556711283,
     0.30527384158804005, 0.761780996844128,
     {1.9262106366665506, 2.4655875733118124, 2.166817080231656,
      1.5358680806260783, 1.8502992503790965},
     1.3933882548008052, 0.1620438530384496},
    {kSample1, 0.3885795343888745, 0.3639470903492961,
     1.3343133009139538, 0.19248466563890487,
     {1.698196436388078, 2.2208327033129347, 1.7959332826476468,
      2.143560834755334, 2.749144553839392},
     3.6085072287813955, 0.0008460784923636222},
    {kSample2, 0.5311412737604471, 0.16274531600342038,
     0.3856032107659788, 0.702192703727142,
     {1.9952580933390516, 2.039556710051538, 2.069391849348988,
      1.8011224633771614, 1.592467290988998},
     1.9065644353696296, 0.03861107312147105},
    {kSample3, 0.3805229539847801, 0.38809960041465263,
     0.9639284765183661, 0.3403498762779694,
     {0.9209829153627371, 1.407681918978653, 1.5710526011464607,
      1.8853369182666746, 2.056958999917292},
     1.150104851700933, 0.328215231174516},
    {kSample4, 1.9177847102137697, 4.7740820013113856e-05,
     -0.5108347632166413, 0.6141339253137255,
     {1.7170075051966875, 1.7381031776895235, 2.4586612720657675,
      2.301631539433077, 1.9750448072670381},
     2.3454458884242535, 0.028558412209954698},
    {kSample5, 0.278252834090182, 0.6382829752006927,
     3.3244920569228125, 0.0015265644006163287,
     {1.9843896422949423, 1.857221461547133, 2.009792118256675,
      1.7457556294205658, 1.8638104251058976},
     4.0956423349098605, 2.1324691634738713e-07},
    {kSample6, 0.7136766648691619, 0.05254531269027851,
     -1.3827419684029236, 0.18278117618806336,
     {2.2736451277291883, 2.354899365972145, 1.9652030049531777,
      1.078761667631515, 1.851665747740536},
     3.6789684195324424, 0.006508553783341586},
    {kSample7, 0.23654904198170357, 0.7684940750508622,
     0.6149490245177123, 0.5430764317180277,
     {0.7691435177567966, 1.6629838349279287, 2.4714442774701975,
      3.05053433725086, 3.1126776354094803},
     1.5954092910419013, 0.11133182671477981},
    {kSample8, 0.389225496177275, 0.37101598854819573,
     -0.3549695863243793, 0.7242003562470616,
     {2.0601534634982146, 2.3338439515549605, 1.8780905230676064,
      2.001091351256524, 1.9847816048880158},
     93.48542129015806, 1.1102230246251565e-16},
    {kSample9, 3.118224588554529, 4.836776889103014e-08,
     0.9827577190810598, 0.3344516412430699,
     {2.2594916639524993, 2.3686472521409065, 1.5265172163019327,
      2.0360431855994623, 2.181701034398684},
     7.00733239595158, 5.088019328747251e-06},
};

constexpr double kAlpha = 0.05;
constexpr double kVarEps = 1.0;
constexpr int kNFreeParams = 4;

// The grid the reference regressor was generated on.
std::vector<double> reference_regressor(std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = 300.0 + 500.0 * static_cast<double>(i) /
                           static_cast<double>(n - 1);
    return t;
}

struct Accumulator {
    SelftestCheck check;
    explicit Accumulator(std::string name, double tolerance) {
        check.name = std::move(name);
        check.tolerance = tolerance;
    }
    void add(double computed, double expected) {
        ++check.cases;
        check.max_error =
            std::max(check.max_error, std::abs(computed - expected));
    }
    SelftestCheck finish() {
        check.passed = check.max_error <= check.tolerance;
        return check;
    }
};

} // namespace

std::vector<SelftestCheck> run_selftest() {
    std::vector<SelftestCheck> checks;

    Accumulator normal("normal_cdf", 1e-12);
    for (const CdfPoint& p : kNormalTable)
        normal.add(normal_cdf(p.x), p.expected);
    checks.push_back(normal.finish());

    Accumulator t_dist("t_cdf", 1e-10);
    for (const TPoint& p : kTTable) t_dist.add(t_cdf(p.x, p.df), p.expected);
    checks.push_back(t_dist.finish());

    Accumulator f_dist("f_cdf", 1e-10);
    for (const FPoint& p : kFTable)
        f_dist.add(f_cdf(p.x, p.d1, p.d2), p.expected);
    checks.push_back(f_dist.finish());

    Accumulator ad_stat("anderson_darling_statistic", 1e-6);
    Accumulator ad_p("anderson_darling_p_value", 1e-4);
    Accumulator t_stat("t_test_statistic", 1e-6);
    Accumulator t_p("t_test_p_value", 1e-4);
    Accumulator dw_stat("durbin_watson_statistics", 1e-6);
    Accumulator f_stat("variance_f_statistic", 1e-6);
    Accumulator f_p("variance_f_p_value", 1e-4);
    for (const DiagnosticsReference& ref : kDiagnostics) {
        const TestResult ad = anderson_darling_test(ref.sample, kAlpha);
        ad_stat.add(ad.statistic, ref.ad_statistic);
        ad_p.add(ad.p_value, ref.ad_p);

        const TestResult tt = one_sample_t_test(ref.sample, kAlpha);
        t_stat.add(tt.statistic, ref.t_statistic);
        t_p.add(tt.p_value, ref.t_p);

        const std::vector<double> regressor =
            reference_regressor(ref.sample.size());
        // statistics only; the bootstrap p-values have no frozen reference
        const DurbinWatsonResult dw =
            durbin_watson_test(ref.sample, regressor, 5, kAlpha, 100, 42);
        for (int lag = 0; lag < 5; ++lag)
            dw_stat.add(dw.lags[static_cast<std::size_t>(lag)].statistic,
                        ref.dw[lag]);

        const TestResult ft =
            variance_f_test(ref.sample, kVarEps, kNFreeParams, kAlpha);
        f_stat.add(ft.statistic, ref.f_statistic);
        f_p.add(ft.p_value, ref.f_p);
    }
    checks.push_back(ad_stat.finish());
    checks.push_back(ad_p.finish());
    checks.push_back(t_stat.finish());
    checks.push_back(t_p.finish());
    checks.push_back(dw_stat.finish());
    checks.push_back(f_stat.finish());
    checks.push_back(f_p.finish());
    return checks;
}

} // namespace debyedec
