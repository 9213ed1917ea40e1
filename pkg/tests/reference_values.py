"""Reference values for the two example structures.

Angles in degrees.  The example 2 configuration rows list only the
positive-sigma member of each mirror pair; the partner has sigma, both
angles and every z coordinate negated.
"""
import numpy as np

EXAMPLE1 = dict(alpha_deg=80.0, beta_deg=115.0, zeta=1.0,
                A=[[-1, 2, -1], [-1, -1, 1], [2, 0, 2]],
                B=[[-1, 1, 0], [0, -1, 1], [1, -1, 1]],
                L=[3, 4, 5])

EXAMPLE2 = dict(r_base=4.0, r_platform=3.0, L=[6, 7, 7])

EX1_REAL_ROOTS = [
    -5.0742351861635417,
    -4.9208457694073359,
    -3.2485304798567102,
    -2.9472972942348737,
    0.4336937265758375,
    1.8716859056627936,
    2.8533551381339947,
    3.0202234858973762,
]

EX1_ROOT_PAIRS = [
    (-2.6539388259158195, 0.3470682923497006),
    (0.6288934148939096, 0.0920713380338177),
    (5.3978372439452376, 1.6353960015160476),
    (-1.0796669034069113, 0.3665477831699458),
    (-1.1754717456325313, 0.5718777661241322),
    (-0.5607303198355512, 0.2771024466996316),
    (-1.7925839699411944, 0.9012404143420023),
    (-5.1649516067821035, 2.7634387909159706),
    (2.2577581202525811, 1.5176837470894034),
    (0.1539845408833452, 1.5772504431994877),
]


def example1_roots():
    pairs = [complex(re, s * im) for re, im in EX1_ROOT_PAIRS for s in (1, -1)]
    return np.array([complex(r) for r in EX1_REAL_ROOTS] + pairs)


# (sigma, theta1, theta2, B1, B2, B3)
EX1_CONFIGS = [
    (-5.0742351861635417, 35.9079893748161347, 28.9649324307956022,
     (-2.6781700217812648, 4.2576192315137761, 0.0425453388192841),
     (-1.3653461635426380, 2.4582409822157228, -0.9766364080701107),
     (-0.4866581591368590, 2.7552713092491167, -1.3503747868002389)),
    (-4.9208457694073359, -16.7397063715162090, 9.9331724537507540,
     (-1.3793980152669597, 2.1242250978426177, -3.9733188983150603),
     (-0.2291846275909712, 0.4011369623340533, -2.6664231717628057),
     (0.7562770072030819, 0.3546626347909773, -2.8298413568844473)),
    (-3.2485304798567102, -79.0280445391782827, 163.9997204883860072,
     (0.6767083869286662, 4.4729707002083387, -1.2703051999391603),
     (-0.6247488516958736, 2.8653898224331031, 0.0419039211399423),
     (-1.5268699670835949, 2.6627327388291424, -0.3390259931970009)),
    (-2.9472972942348737, -96.1096693511796809, 174.4317612902740866,
     (1.2373743598687456, 3.5504833066462911, -2.2610144684392421),
     (-0.2846112277092414, 2.5978678155458440, -0.5948561334301278),
     (-1.2197274745538063, 2.4665375488648706, -0.9239609282004854)),
    (0.4336937265758375, 170.8277016071986500, -12.7989139878393903,
     (-1.0892329362024957, -0.9986059923310343, -0.9800103563539957),
     (-0.3399926313342539, 0.7296870316619115, -2.5457824306924873),
     (0.6359101341710010, 0.6907160998793561, -2.7604800290842598)),
    (1.8716859056627936, 80.9195928499276312, 169.0366603163963822,
     (1.4412409995520388, 0.4025929011426914, -0.3009771515705376),
     (0.0287424686051592, 1.3736985290103308, -2.0507776429399693),
     (-0.8932495553923580, 1.6121281380216517, -1.7456841667205158)),
    (2.8533551381339947, -42.5300309414956836, -45.9066707230024256,
     (-2.6914641610939969, 1.3842880246672619, 1.3999682821167531),
     (-2.7977917841657982, 1.1712865124310922, 3.8378617975019116),
     (-2.0927907285236484, 1.6877341071135708, 4.3239228980748094)),
    (3.0202234858973762, 155.8002697774543024, -167.5798330690447930,
     (0.4535864782038204, 1.2918626159811463, 1.5269799753337874),
     (-1.3512558881446214, 2.9478794426552221, 1.5393210614318953),
     (-2.2682508421575309, 2.5527403119887298, 1.4846829636338322)),
]

EX2_REAL_SQUARES = [
    -5.8696327988584050,
    -4.0239570540158663,
    -3.3666899614601473,
    -3.0563577788337002,
    0.4733932871332810,
    2.0748284313315206,
    2.1224196727429542,
    15.5595408347198758,
    21.0556791945148852,
    43.4967317928178336,
]

EX2_SQUARE_PAIRS = [
    (-2.9629094839493732, 14.2663109067628893),
    (-23.3534016594300759, 29.6740259421679502),
]


def example2_squares():
    pairs = [complex(re, s * im) for re, im in EX2_SQUARE_PAIRS for s in (1, -1)]
    return np.array([complex(r) for r in EX2_REAL_SQUARES] + pairs)


# positive-sigma member of each mirror pair: (sigma, theta1, theta2, B1, B2, B3)
EX2_UPPER_CONFIGS = [
    (0.6880358182051869, -156.7136782148684357, 132.9139078387645247,
     (-1.2651245735830280, 0.4403916388669646, 2.7710843193352510),
     (0.5039020492352966, -2.9408258391083399, -0.7556582534072386),
     (2.2729286720536212, 1.9448237362397493, -0.7244647499004386)),
    (1.4404264755035297, 166.0952410961427079, 119.6888747109510109,
     (-0.0354627690969302, 2.1698695743141532, 2.5229421027453670),
     (1.2513383830026394, -2.7406464460835599, 1.4134488813273061),
     (2.5381395351022091, 1.0851062606708437, -1.8588223515805918)),
    (1.4568526599292580, -121.5113162764218017, 159.9432882232469948,
     (-1.9408845599906445, -1.1423155877154994, 2.4597767979219313),
     (0.4996277511034456, -2.7346975409071307, -1.8423412123780870),
     (2.9401400621975357, 0.3769231127194106, 1.5283733361001609)),
    (3.9445583827242151, -50.1598159353873538, 169.3917522904197658,
     (-1.8275071621977196, -4.3052204648024363, -1.6385466597818347),
     (0.7261649628862395, -1.0550573956600155, -4.7873875102460014),
     (3.2798370879701985, -3.5707296855931061, -1.0257187838385341)),
    (4.5886467715999763, -150.30166338368242480, 10.1346512335003609,
     (3.3649661993974588, 3.31437262447962296, -2.7834539294781876),
     (0.8074279219136203, -0.36804010068563934, -5.4100171746230568),
     (-1.7501103555702182, 3.76736025607133018, -3.5776793650095212)),
    (6.5952052123355368, 4.85386761100620255, 8.3399034085793430,
     (3.5272052199421251, -2.01488429854254115, 5.9996496891666592),
     (0.9566036312166227, 2.43709147410222920, 6.7559030804489217),
     (-1.6139979575088798, -2.07865648248668464, 6.7506243869579265)),
]


def mirrored(row):
    sigma, th1, th2, *points = row
    return (-sigma, -th1, -th2) + tuple((x, y, -z) for x, y, z in points)


def example2_configs():
    """All twelve configurations sorted by sigma."""
    rows = EX2_UPPER_CONFIGS + [mirrored(r) for r in EX2_UPPER_CONFIGS]
    return sorted(rows, key=lambda r: r[0])
