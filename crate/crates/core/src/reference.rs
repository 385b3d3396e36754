//! Reference binding energies (`-E`, positive) for the standard grids.
//!
//! Grid 1 is in atomic units with `A = 2b`; columns are the Case 1 closed form,
//! the legacy closed form and an exact-barrier numerical solution, each for
//! `α = 0.75` and `α = 1.5`. Grids 2 and 3 are in eV for two molecules each,
//! with `A = 2b` and `b` in pm; columns are `α ∈ {0 or 1, 0.75, 1.5}`.

/// `α` values of the grid-1 column pairs.
pub const GRID1_ALPHAS: [f64; 2] = [0.75, 1.5];
/// `α` values of the molecular columns; the first stands for both 0 and 1.
pub const MOLECULE_ALPHAS: [f64; 3] = [0.0, 0.75, 1.5];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomicRow {
    pub state: &'static str,
    pub inv_b: f64,
    pub case1: [f64; 2],
    pub legacy: [f64; 2],
    pub numerical: [Option<f64>; 2],
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MolecularRow {
    pub state: &'static str,
    pub inv_b: f64,
    /// `[molecule][alpha column]`
    pub values: [[f64; 3]; 2],
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MolecularTable {
    pub molecules: [&'static str; 2],
    pub rows: &'static [MolecularRow],
}

pub const GRID1: &[AtomicRow] = &[
    AtomicRow {
        state: "2p",
        inv_b: 0.025,
        case1: [0.1205297, 0.0899732],
        legacy: [0.1205793, 0.0900229],
        numerical: [Some(0.1205271), Some(0.0899708)],
    },
    AtomicRow {
        state: "2p",
        inv_b: 0.050,
        case1: [0.1082245, 0.0800489],
        legacy: [0.1084228, 0.0802472],
        numerical: [Some(0.1082151), Some(0.0800400)],
    },
    AtomicRow {
        state: "2p",
        inv_b: 0.075,
        case1: [0.0964658, 0.0705870],
        legacy: [0.0969120, 0.0710332],
        numerical: [Some(0.0964469), Some(0.0705701)],
    },
    AtomicRow {
        state: "2p",
        inv_b: 0.100,
        case1: [0.0852807, 0.0569224],
        legacy: [0.0860740, 0.0577157],
        numerical: [None, None],
    },
    AtomicRow {
        state: "3p",
        inv_b: 0.025,
        case1: [0.0458800, 0.0369154],
        legacy: [0.0459297, 0.0369651],
        numerical: [Some(0.0458779), Some(0.0369134)],
    },
    AtomicRow {
        state: "3p",
        inv_b: 0.050,
        case1: [0.0350689, 0.0272736],
        legacy: [0.0352672, 0.0274719],
        numerical: [Some(0.0350633), Some(0.0272696)],
    },
    AtomicRow {
        state: "3p",
        inv_b: 0.075,
        case1: [0.0255647, 0.0189388],
        legacy: [0.0260110, 0.0193850],
        numerical: [Some(0.0255654), Some(0.0189474)],
    },
    AtomicRow {
        state: "3p",
        inv_b: 0.100,
        case1: [0.0173676, 0.0119110],
        legacy: [0.0181609, 0.0127043],
        numerical: [None, None],
    },
    AtomicRow {
        state: "3d",
        inv_b: 0.025,
        case1: [0.0447812, 0.0394857],
        legacy: [0.0449299, 0.0396345],
        numerical: [Some(0.0447743), Some(0.0394789)],
    },
    AtomicRow {
        state: "3d",
        inv_b: 0.050,
        case1: [0.0337133, 0.0294680],
        legacy: [0.0343082, 0.0300629],
        numerical: [Some(0.0336930), Some(0.0294496)],
    },
    AtomicRow {
        state: "3d",
        inv_b: 0.075,
        case1: [0.0237782, 0.0204734],
        legacy: [0.0251168, 0.0218121],
        numerical: [Some(0.0237621), Some(0.0204663)],
    },
    AtomicRow {
        state: "4p",
        inv_b: 0.025,
        case1: [0.0208112, 0.0171753],
        legacy: [0.0208608, 0.0172249],
        numerical: [Some(0.0208097), Some(0.0171740)],
    },
    AtomicRow {
        state: "4p",
        inv_b: 0.050,
        case1: [0.0117308, 0.0089036],
        legacy: [0.0119292, 0.0091019],
        numerical: [Some(0.0117365), Some(0.0089134)],
    },
    AtomicRow {
        state: "4p",
        inv_b: 0.075,
        case1: [0.0050311, 0.0031016],
        legacy: [0.0054773, 0.0035478],
        numerical: [Some(0.0050945), Some(0.0031884)],
    },
    AtomicRow {
        state: "4d",
        inv_b: 0.025,
        case1: [0.0203068, 0.0182162],
        legacy: [0.0204555, 0.0183649],
        numerical: [Some(0.0203017), Some(0.0182115)],
    },
    AtomicRow {
        state: "4d",
        inv_b: 0.050,
        case1: [0.0109792, 0.0094998],
        legacy: [0.0115742, 0.0100947],
        numerical: [Some(0.0109904), Some(0.0095167)],
    },
    AtomicRow {
        state: "4d",
        inv_b: 0.075,
        case1: [0.0038661, 0.0029422],
        legacy: [0.0052047, 0.0042808],
        numerical: [Some(0.0040331), Some(0.0031399)],
    },
    AtomicRow {
        state: "4f",
        inv_b: 0.025,
        case1: [0.0199911, 0.0186247],
        legacy: [0.0202887, 0.0189223],
        numerical: [Some(0.0199797), Some(0.0186137)],
    },
    AtomicRow {
        state: "4f",
        inv_b: 0.050,
        case1: [0.0102384, 0.0093953],
        legacy: [0.0114284, 0.0105852],
        numerical: [Some(0.0102393), Some(0.0094015)],
    },
    AtomicRow {
        state: "4f",
        inv_b: 0.075,
        case1: [0.0024162, 0.0019754],
        legacy: [0.0050935, 0.0046527],
        numerical: [Some(0.0026443), Some(0.0022307)],
    },
    AtomicRow {
        state: "5p",
        inv_b: 0.025,
        case1: [0.0098080, 0.0080812],
        legacy: [0.0098576, 0.0081308],
        numerical: [Some(0.0098079), Some(0.0080816)],
    },
    AtomicRow {
        state: "5d",
        inv_b: 0.025,
        case1: [0.0095150, 0.0085415],
        legacy: [0.0096637, 0.0086902],
        numerical: [Some(0.0095141), Some(0.0085415)],
    },
    AtomicRow {
        state: "5f",
        inv_b: 0.025,
        case1: [0.0092862, 0.0086647],
        legacy: [0.0095837, 0.0089622],
        numerical: [Some(0.0092825), Some(0.0086619)],
    },
    AtomicRow {
        state: "5g",
        inv_b: 0.025,
        case1: [0.0090440, 0.0086252],
        legacy: [0.0095398, 0.0091210],
        numerical: [Some(0.0090330), Some(0.0086150)],
    },
    AtomicRow {
        state: "6p",
        inv_b: 0.025,
        case1: [0.0043555, 0.0034838],
        legacy: [0.0044051, 0.0035334],
        numerical: [Some(0.0043583), Some(0.0034876)],
    },
    AtomicRow {
        state: "6d",
        inv_b: 0.025,
        case1: [0.0041574, 0.0036722],
        legacy: [0.0043061, 0.0038209],
        numerical: [Some(0.0041650), Some(0.0036813)],
    },
    AtomicRow {
        state: "6f",
        inv_b: 0.025,
        case1: [0.0039677, 0.0036631],
        legacy: [0.0042652, 0.0039606],
        numerical: [Some(0.0039803), Some(0.0036774)],
    },
    AtomicRow {
        state: "6g",
        inv_b: 0.025,
        case1: [0.0037470, 0.0035464],
        legacy: [0.0042428, 0.0040422],
        numerical: [Some(0.0037611), Some(0.0035623)],
    },
];

pub const GRID2: MolecularTable = MolecularTable {
    molecules: ["HCl", "CH"],
    rows: &[
        MolecularRow {
            state: "2p",
            inv_b: 0.025,
            values: [
                [4.80941188, 5.14067096, 3.83741636],
                [5.06889891, 5.41803073, 4.04446034],
            ],
        },
        MolecularRow {
            state: "2p",
            inv_b: 0.050,
            values: [
                [4.30992001, 4.61584459, 3.41413694],
                [4.54245745, 4.86488789, 3.59834329],
            ],
        },
        MolecularRow {
            state: "2p",
            inv_b: 0.075,
            values: [
                [3.83285565, 4.11432861, 3.01058097],
                [4.03965355, 4.33631311, 3.17301386],
            ],
        },
        MolecularRow {
            state: "2p",
            inv_b: 0.100,
            values: [
                [3.37821878, 3.63612726, 2.42777890],
                [3.56048721, 3.83231089, 2.55876729],
            ],
        },
        MolecularRow {
            state: "3p",
            inv_b: 0.025,
            values: [
                [1.86422242, 1.95681272, 1.57446670],
                [1.96480468, 2.06239060, 1.65941548],
            ],
        },
        MolecularRow {
            state: "3p",
            inv_b: 0.050,
            values: [
                [1.41471071, 1.49571070, 1.16323608],
                [1.49104002, 1.57641028, 1.22599733],
            ],
        },
        MolecularRow {
            state: "3p",
            inv_b: 0.075,
            values: [
                [1.02094947, 1.09035060, 0.80775166],
                [1.07603378, 1.14917938, 0.85133310],
            ],
        },
        MolecularRow {
            state: "3p",
            inv_b: 0.100,
            values: [
                [0.68293440, 0.74074096, 0.50801342],
                [0.71978146, 0.78070691, 0.53542279],
            ],
        },
        MolecularRow {
            state: "3d",
            inv_b: 0.025,
            values: [
                [1.85999327, 1.90994571, 1.68408920],
                [1.96034735, 2.01299493, 1.77495255],
            ],
        },
        MolecularRow {
            state: "3d",
            inv_b: 0.050,
            values: [
                [1.39779410, 1.43789211, 1.25682731],
                [1.47321069, 1.51547215, 1.32463817],
            ],
        },
        MolecularRow {
            state: "3d",
            inv_b: 0.075,
            values: [
                [0.98288709, 1.01415428, 0.87320241],
                [1.03591778, 1.06887196, 0.92031517],
            ],
        },
        MolecularRow {
            state: "3d",
            inv_b: 0.100,
            values: [
                [0.61526795, 0.63872794, 0.53322303],
                [0.64846412, 0.67318987, 0.56199254],
            ],
        },
        MolecularRow {
            state: "4p",
            inv_b: 0.025,
            values: [
                [0.85089842, 0.88761210, 0.73253860],
                [0.89680780, 0.93550233, 0.77206199],
            ],
        },
        MolecularRow {
            state: "4p",
            inv_b: 0.050,
            values: [
                [0.47136150, 0.50032556, 0.37974364],
                [0.49679334, 0.52732013, 0.40023233],
            ],
        },
        MolecularRow {
            state: "4p",
            inv_b: 0.075,
            values: [
                [0.19422206, 0.21457922, 0.13228479],
                [0.20470112, 0.22615662, 0.13942208],
            ],
        },
        MolecularRow {
            state: "4d",
            inv_b: 0.025,
            values: [
                [0.84666927, 0.86609664, 0.77693119],
                [0.89235047, 0.91282602, 0.81884974],
            ],
        },
        MolecularRow {
            state: "4d",
            inv_b: 0.050,
            values: [
                [0.45444489, 0.46826797, 0.40517060],
                [0.47896401, 0.49353290, 0.42703117],
            ],
        },
        MolecularRow {
            state: "4d",
            inv_b: 0.075,
            values: [
                [0.15615968, 0.16489027, 0.12548533],
                [0.16458512, 0.17378676, 0.13225577],
            ],
        },
        MolecularRow {
            state: "4f",
            inv_b: 0.025,
            values: [
                [0.84032554, 0.85263452, 0.79435667],
                [0.88566447, 0.89863756, 0.83721539],
            ],
        },
        MolecularRow {
            state: "4f",
            inv_b: 0.050,
            values: [
                [0.42906997, 0.43667458, 0.40071582],
                [0.45222001, 0.46023492, 0.42233604],
            ],
        },
        MolecularRow {
            state: "4f",
            inv_b: 0.075,
            values: [
                [0.09906611, 0.10305395, 0.08425354],
                [0.10441112, 0.10861411, 0.08879935],
            ],
        },
        MolecularRow {
            state: "5p",
            inv_b: 0.025,
            values: [
                [0.40106735, 0.41831847, 0.34466933],
                [0.42270654, 0.44088842, 0.36326562],
            ],
        },
        MolecularRow {
            state: "5d",
            inv_b: 0.025,
            values: [
                [0.39683820, 0.40581936, 0.36429895],
                [0.41824921, 0.42771494, 0.38395434],
            ],
        },
        MolecularRow {
            state: "5f",
            inv_b: 0.025,
            values: [
                [0.39049447, 0.39606358, 0.36955620],
                [0.41156321, 0.41743279, 0.38949523],
            ],
        },
        MolecularRow {
            state: "5g",
            inv_b: 0.025,
            values: [
                [0.38203616, 0.38573290, 0.36787081],
                [0.40264543, 0.40654473, 0.38771891],
            ],
        },
        MolecularRow {
            state: "6p",
            inv_b: 0.025,
            values: [
                [0.17707786, 0.18576580, 0.14858723],
                [0.18663192, 0.19578861, 0.15660410],
            ],
        },
        MolecularRow {
            state: "6d",
            inv_b: 0.025,
            values: [
                [0.17284871, 0.17731423, 0.15662014],
                [0.18217459, 0.18688105, 0.16507042],
            ],
        },
        MolecularRow {
            state: "6f",
            inv_b: 0.025,
            values: [
                [0.16650498, 0.16922609, 0.15623470],
                [0.17548859, 0.17835652, 0.16466420],
            ],
        },
        MolecularRow {
            state: "6g",
            inv_b: 0.025,
            values: [
                [0.15804667, 0.15981241, 0.15125669],
                [0.16657392, 0.16843493, 0.15941759],
            ],
        },
    ],
};

pub const GRID3: MolecularTable = MolecularTable {
    molecules: ["LiH", "CO"],
    rows: &[
        MolecularRow {
            state: "2p",
            inv_b: 0.025,
            values: [
                [5.35576397, 5.72465427, 4.27334918],
                [1.37443170, 0.73438794, 0.54852071],
            ],
        },
        MolecularRow {
            state: "2p",
            inv_b: 0.050,
            values: [
                [4.79952952, 5.14020732, 3.80198495],
                [1.23262476, 0.65941210, 0.48773809],
            ],
        },
        MolecularRow {
            state: "2p",
            inv_b: 0.075,
            values: [
                [4.26827035, 4.58171881, 3.35258477],
                [1.09782989, 0.58776634, 0.43008673],
            ],
        },
        MolecularRow {
            state: "2p",
            inv_b: 0.100,
            values: [
                [3.76198647, 4.04919351, 2.70357604],
                [0.97004711, 0.51945126, 0.34682857],
            ],
        },
        MolecularRow {
            state: "3p",
            inv_b: 0.025,
            values: [
                [2.07599922, 2.17910783, 1.75332707],
                [0.53294169, 0.27954710, 0.22492577],
            ],
        },
        MolecularRow {
            state: "3p",
            inv_b: 0.050,
            values: [
                [1.57542270, 1.66562433, 1.29538040],
                [0.40541491, 0.21367481, 0.16617803],
            ],
        },
        MolecularRow {
            state: "3p",
            inv_b: 0.075,
            values: [
                [1.13692993, 1.21421508, 0.89951273],
                [0.29442115, 0.15576572, 0.11539410],
            ],
        },
        MolecularRow {
            state: "3p",
            inv_b: 0.100,
            values: [
                [0.76051617, 0.82488959, 0.56572406],
                [0.19995917, 0.10582106, 0.07257398],
            ],
        },
        MolecularRow {
            state: "3d",
            inv_b: 0.025,
            values: [
                [2.07128963, 2.12691670, 1.87540274],
                [0.53233752, 0.27285176, 0.24058626],
            ],
        },
        MolecularRow {
            state: "3d",
            inv_b: 0.050,
            values: [
                [1.55658435, 1.60123752, 1.39960364],
                [0.40299823, 0.20541494, 0.17954832],
            ],
        },
        MolecularRow {
            state: "3d",
            inv_b: 0.075,
            values: [
                [1.09454364, 1.12936281, 0.97239872],
                [0.29098362, 0.14488044, 0.12474428],
            ],
        },
        MolecularRow {
            state: "3d",
            inv_b: 0.100,
            values: [
                [0.68516276, 0.71128782, 0.59379748],
                [0.19029245, 0.09124764, 0.07617538],
            ],
        },
        MolecularRow {
            state: "4p",
            inv_b: 0.025,
            values: [
                [0.94756010, 0.98844538, 0.81575544],
                [0.24341803, 0.12680283, 0.10464928],
            ],
        },
        MolecularRow {
            state: "4p",
            inv_b: 0.050,
            values: [
                [0.52490845, 0.55716284, 0.42288275],
                [0.13588423, 0.07147570, 0.05424956],
            ],
        },
        MolecularRow {
            state: "4p",
            inv_b: 0.075,
            values: [
                [0.21628580, 0.23895554, 0.14731241],
                [0.05821126, 0.03065444, 0.01889799],
            ],
        },
        MolecularRow {
            state: "4d",
            inv_b: 0.025,
            values: [
                [0.94285141, 0.96448574, 0.86519105],
                [0.24281386, 0.12372917, 0.11099113],
            ],
        },
        MolecularRow {
            state: "4d",
            inv_b: 0.050,
            values: [
                [0.50607010, 0.52146349, 0.45119822],
                [0.13346755, 0.06658523, 0.05788202],
            ],
        },
        MolecularRow {
            state: "4d",
            inv_b: 0.075,
            values: [
                [0.17389951, 0.18362190, 0.13974054],
                [0.05277373, 0.02355596, 0.01792663],
            ],
        },
        MolecularRow {
            state: "4f",
            inv_b: 0.025,
            values: [
                [0.93578703, 0.94949432, 0.88459607],
                [0.24190761, 0.12180599, 0.11348051],
            ],
        },
        MolecularRow {
            state: "4f",
            inv_b: 0.050,
            values: [
                [0.47781258, 0.48628108, 0.44623738],
                [0.12984253, 0.06238263, 0.05724561],
            ],
        },
        MolecularRow {
            state: "4f",
            inv_b: 0.075,
            values: [
                [0.11032008, 0.11476093, 0.09382479],
                [0.04461744, 0.01472212, 0.01203632],
            ],
        },
        MolecularRow {
            state: "5p",
            inv_b: 0.025,
            values: [
                [0.44662885, 0.46583971, 0.38382398],
                [0.11489375, 0.05976030, 0.04923890],
            ],
        },
        MolecularRow {
            state: "5d",
            inv_b: 0.025,
            values: [
                [0.44191926, 0.45192068, 0.40568353],
                [0.11428958, 0.05797470, 0.05204316],
            ],
        },
        MolecularRow {
            state: "5f",
            inv_b: 0.025,
            values: [
                [0.43485488, 0.44105664, 0.41153801],
                [0.11338333, 0.05658100, 0.05279420],
            ],
        },
        MolecularRow {
            state: "5g",
            inv_b: 0.025,
            values: [
                [0.42543570, 0.42955239, 0.40966116],
                [0.11217500, 0.05510518, 0.05255343],
            ],
        },
        MolecularRow {
            state: "6p",
            inv_b: 0.025,
            values: [
                [0.19719402, 0.20686891, 0.16546683],
                [0.05089620, 0.02653820, 0.02122693],
            ],
        },
        MolecularRow {
            state: "6d",
            inv_b: 0.025,
            values: [
                [0.19248443, 0.19745724, 0.17441228],
                [0.05029203, 0.02533082, 0.02237450],
            ],
        },
        MolecularRow {
            state: "6f",
            inv_b: 0.025,
            values: [
                [0.18542005, 0.18845028, 0.17398306],
                [0.04938577, 0.02417537, 0.02231944],
            ],
        },
        MolecularRow {
            state: "6g",
            inv_b: 0.025,
            values: [
                [0.17600087, 0.17796720, 0.16843954],
                [0.04817743, 0.02283054, 0.02160829],
            ],
        },
    ],
};
