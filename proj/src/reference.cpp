#include "abelkit/reference.hpp"

#include <sstream>

#include "abelkit/error.hpp"

namespace abelkit::reference {

namespace {

// "e:value" pairs separated by spaces; "ln:value" is the log coefficient.
std::vector<SeriesTerm> terms(const std::string &text)
{
    std::vector<SeriesTerm> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        const auto colon = tok.find(':');
        const std::string key = tok.substr(0, colon), value = tok.substr(colon + 1);
        if (key == "ln")
            out.push_back({0, value, true});
        else
            out.push_back({std::stoi(key), value, false});
    }
    return out;
}

} // namespace

const std::vector<PublishedSeries> &series()
{
    using enum SeriesKind;
    static const std::vector<PublishedSeries> table{
        {"g1", "logistic", Abel, 1,
         terms("-1:1 ln:1 1:1/2 2:1/3 3:13/36 4:113/240 5:1187/1800 6:877/945 7:14569/11760 "
               "8:176017/120960 9:1745717/1360800 10:88217/259875 11:-147635381/109771200 "
               "12:-3238110769/1556755200")},
        {"g3", "sin", Abel, 1,
         terms("-2:3 ln:6/5 2:79/1050 4:29/2625 6:91543/36382500 8:18222899/28378350000 "
               "10:88627739/573024375000 12:3899439883/142468185234375 "
               "14:-32544553328689/116721334798818750000")},
        {"lambda6", "xexp-neg", Lambda, 1,
         terms("2:-1 3:-1/2 4:-5/12 5:-5/12 6:-107/240 7:-173/360 8:-7577/15120 9:-14867/30240 "
               "10:-36461/80640 11:-41891/100800 12:-493013/1108800")},
        {"g6'", "xexp-neg", AbelDerivative, 1,
         terms("-2:-1 -1:1/2 0:1/6 1:1/8 2:19/180 3:1/12 4:41/840 5:37/17280 6:-18349/453600 "
               "7:-443/10080 8:55721/2395008 9:84317/691200 10:2594833561/36324288000 "
               "11:-152043613/479001600 12:-830066563/1334361600")},
        {"g6", "xexp-neg", Abel, 1,
         terms("-1:1 ln:1/2 1:1/6 2:1/16 3:19/540 4:1/48 5:41/4200 6:37/103680 7:-18349/3175200 "
               "8:-443/80640 9:55721/21555072 10:84317/6912000 11:2594833561/399567168000 "
               "12:-152043613/5748019200")},
        {"lambda7", "lambert-w", Lambda, 1,
         terms("2:-1 3:1/2 4:-5/12 5:5/12 6:-107/240 7:173/360 8:-7577/15120 9:14867/30240 "
               "10:-36461/80640 11:41891/100800 12:-493013/1108800")},
        {"-g7'", "lambert-w", AbelDerivative, 1,
         terms("-2:-1 -1:-1/2 0:1/6 1:-1/8 2:19/180 3:-1/12 4:41/840 5:-37/17280 6:-18349/453600 "
               "7:443/10080 8:55721/2395008 9:-84317/691200 10:2594833561/36324288000 "
               "11:152043613/479001600 12:-830066563/1334361600")},
        {"-g7", "lambert-w", Abel, 1,
         terms("-1:1 ln:-1/2 1:1/6 2:-1/16 3:19/540 4:-1/48 5:41/4200 6:-37/103680 7:-18349/3175200 "
               "8:443/80640 9:55721/21555072 10:-84317/6912000 11:2594833561/399567168000 "
               "12:152043613/5748019200")},
        {"lambda8", "x-over-1px2", Lambda, 1,
         terms("3:-1 5:-1/2 7:-1/2 9:-7/12 11:-2/3 13:-13/20 15:-9/20 17:-71/280 19:-121/140 "
               "21:-19/7 23:-11/20 25:171569/9240")},
        {"g8", "x-over-1px2", Abel, 1,
         terms("-2:1/2 ln:1/2 2:1/8 4:5/96 6:7/288 8:-1/1280 10:-671/28800 12:-9607/483840 "
               "14:10187/225792 16:954907/7741440 18:-10382759/87091200 20:-299685973/304128000 "
               "22:684110137/14050713600 24:171403792979/15941173248")},
        {"lambda9", "arcsinh", Lambda, 1,
         terms("3:-1/6 5:1/30 7:-41/3780 9:4/945 11:-3337/1871100 13:28069/36486450 "
               "15:-228859/696559500")},
        {"g9", "arcsinh", Abel, 1,
         terms("-2:3 ln:-6/5 2:79/1050 4:-29/2625 6:91543/36382500 8:-18222899/28378350000 "
               "10:88627739/573024375000 12:-3899439883/142468185234375 "
               "14:-32544553328689/116721334798818750000")},
    };
    return table;
}

const std::vector<PublishedConstant> &constants()
{
    using enum ConstantKind;
    static const std::vector<PublishedConstant> table{
        {"g1(1/2)", Abel, "logistic", "1/2",
         "1.7679937861361540504436344067811323310776814331319565155769860596260007646063875144448165163256825025"},
        {"g3(pi/2)", Abel, "sin", "pi/2",
         "2.0896227197295430595378472764175097853990195204433762593345954823058366250507039441172654894541567102"},
        {"g~3(pi/2)", Principal, "sin", "pi/2",
         "1.4304553465286772447007001342639943626105251857497265882937788821233400491195385639930960365659174569"},
        {"g6(1/2)", Abel, "xexp-neg", "1/2",
         "1.7583425585897237206264380621011597759702711962509080917543312980057047235243525304830956768215851070"},
        {"g6(1)", Abel, "xexp-neg", "1",
         "1.2902472086877642916676156841611846372757644146733727282792783387848274298261878073817117283133623657"},
        {"g6(3/2)", Abel, "xexp-neg", "3/2",
         "1.5049279842833515000953933222336771313506075685178370693140248668083561715772083535204539601724490351"},
        {"g7(1)", Abel, "lambert-w", "1",
         "1.1259817765744955783852558789761564280072515098030563945245583299478474227705427041049529141887963750"},
        {"g7(4)", Abel, "lambert-w", "4",
         "-0.1149937237341008416918237871473955482828261003724821296567880346223422503807018752834650657738379829"},
        {"g8(1)", Abel, "x-over-1px2", "1",
         "0.6882843924287254031774733442236691598221350976461793168899434154492265236034277589425850733342338149"},
        {"g8(3)", Abel, "x-over-1px2", "3",
         "3.9652585503680934112415268662209871314066299495841278202764290285396844369745309712979065528562981062"},
        {"g~8(1)", Principal, "x-over-1px2", "1",
         "0.8615711875687117305317813745882133018410101312362431304201134178225749290958514378440509050833384868"},
        {"g9(1)", Abel, "arcsinh", "1",
         "3.0661932701728607872763960723695476512298471326089692066001665791268362518791257272894037050181877216"},
        {"g9(2)", Abel, "arcsinh", "2",
         "0.1225723550627613593674498535209677050945632114479642399460441294453007178151264750096558761008003016"},
        {"g~9(1)", Principal, "arcsinh", "1",
         "3.7253606433737266021135432145230630740183414673026188776409831793093328278102911074135731579064269748"},
        {"b^[1/2](-3/2)", XexpHalf, "xexp", "-3/2",
         "-0.4264166294176332515153118314959282016263288269779343063735255284490601822588280606246428889441780123"},
        {"b^[1/2](-1)", XexpHalf, "xexp", "-1",
         "-0.4886648186650355287868051499783363426032437145420460274529527835852337101053917173648041964826593958"},
        {"b^[1/2](-1/2)", XexpHalf, "xexp", "-1/2",
         "-0.3734798977577790519054197236844372051304606958133286554406703025989395393199161956685435603156864847"},
        {"b^[1/2](1/2)", XexpHalf, "xexp", "1/2",
         "0.6260239513021067337184553317924634006735786718536452196041180904364827145223720139252799764700719890"},
        {"b^[1/2](1)", XexpHalf, "xexp", "1",
         "1.5134281085001618745523784595802361360523303713302752630412064404423776816220701637052381526519832852"},
        {"d^[1/2](1)", XplusinvHalf, "x-plus-inv", "1",
         "1.6682712581427341026136524455363262029030009626079545612116471428413629522821259531646886087189899654"},
        {"d^[1/2](2)", XplusinvHalf, "x-plus-inv", "2",
         "2.2676941608146219556986675663267817404058977213864806150199155621095539006524575786194598054301929223"},
        {"d^[1/2](3)", XplusinvHalf, "x-plus-inv", "3",
         "3.1715628805584589950794328878353040425425234867124085284281807613396012483190218839371168323598229023"},
        {"arcsinh^[1/2](1)", HalfIterate, "arcsinh", "1",
         "0.9355612833589182616399920249225053056758840032520531674271170225577872426642048379958915233196045102"},
        {"arcsinh^[1/2](2)", HalfIterate, "arcsinh", "2",
         "1.6665617031958385003364670121909423594133577955133330718956939445848951705893403956452533778340335331"},
        {"g10(1)", Abel, "tanh", "1",
         "1.5107917958692238844150418798379277168488043699130575867903266412969163121334944455560618488719683881"},
        {"g~10(1)", Principal, "tanh", "1",
         "1.4499720296529992271183399125182753463630058063936834571482244926753012114461573078658989846993713779"},
        {"g11(1)", Abel, "arctan", "1",
         "1.5110547706341955247468183837921765365660348300682045097278522747037923954184486447084322156741355942"},
        {"g~11(1)", Principal, "arctan", "1",
         "1.5718745368504201820435203511118289070518333935875786393699544233254074961057857823985950798467326044"},
        {"g12(1)", Abel, "x-over-sqrt1px", "1",
         "2.0037812946371416249179551894225669833303962507979755557419216169716071349148331180677424980811441121"},
        {"g~12(1)", Principal, "x-over-sqrt1px", "1",
         "2.3503548849171142796265712501516552673681463179781031828022616217183039458996804758706741615793534559"},
    };
    return table;
}

BigFloat argument_value(const std::string &argument, Precision p)
{
    if (argument == "pi/2")
        return BigFloat::pi(p) / 2L;
    return BigFloat::parse(argument, p);
}

} // namespace abelkit::reference
