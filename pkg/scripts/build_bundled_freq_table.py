#!/usr/bin/env python3
"""Regenerate the bundled word-frequency table resource.

The bundled table is an *approximate*, offline-friendly stand-in: a curated
head list of very frequent English words with hand-calibrated per-billion
frequencies, plus banded vocabulary (everyday, extended, academic) assigned
smooth geometric frequencies inside each band. It exists so the toolkit runs
out of the box; production runs should build a real table from an English
Wikipedia dump word count with scripts/build_freq_table.py and pass it via
--freq-table.

Usage: python scripts/build_bundled_freq_table.py (no arguments); writes
src/sasseval/resources/word_freq_per_billion.tsv deterministically.
"""

from __future__ import annotations

import math
from pathlib import Path

VERSION = "bundled-approx-v1"
OUT = Path(__file__).resolve().parents[1] / "src" / "sasseval" / "resources" / "word_freq_per_billion.tsv"

# Head list: (word, frequency per 10^9 tokens), roughly calibrated to large
# English corpora. Order here is documentation only; the file is re-sorted.
HEAD = [
    ("the", 53000000), ("of", 30000000), ("and", 28000000), ("to", 25000000),
    ("a", 21000000), ("in", 17000000), ("is", 10000000), ("that", 9800000),
    ("was", 9000000), ("for", 8800000), ("it", 8200000), ("as", 7300000),
    ("with", 6800000), ("on", 6400000), ("be", 6300000), ("by", 5800000),
    ("he", 5500000), ("this", 5200000), ("are", 5000000), ("at", 4900000),
    ("his", 4700000), ("not", 4600000), ("or", 4400000), ("from", 4300000),
    ("had", 3800000), ("have", 3700000), ("an", 3600000), ("which", 3400000),
    ("but", 3300000), ("you", 3200000), ("they", 3100000), ("were", 3000000),
    ("her", 2900000), ("she", 2800000), ("all", 2700000), ("we", 2600000),
    ("their", 2500000), ("one", 2500000), ("has", 2400000), ("can", 2300000),
    ("been", 2200000), ("more", 2200000), ("its", 2100000), ("i", 2100000),
    ("there", 2000000), ("also", 1900000), ("who", 1900000), ("will", 1800000),
    ("other", 1700000), ("when", 1700000), ("would", 1600000), ("these", 1600000),
    ("new", 1500000), ("some", 1500000), ("so", 1400000), ("if", 1400000),
    ("may", 1300000), ("such", 1300000), ("into", 1300000), ("than", 1250000),
    ("two", 1200000), ("time", 1200000), ("only", 1150000), ("first", 1100000),
    ("most", 1100000), ("no", 1050000), ("them", 1000000), ("about", 1000000),
    ("out", 980000), ("up", 960000), ("then", 900000), ("after", 880000),
    ("used", 860000), ("many", 840000), ("between", 820000), ("during", 800000),
    ("where", 780000), ("both", 760000), ("each", 740000), ("over", 730000),
    ("use", 720000), ("under", 700000), ("through", 690000), ("well", 680000),
    ("because", 660000), ("could", 650000), ("using", 640000), ("our", 630000),
    ("how", 620000), ("while", 610000), ("same", 600000), ("however", 590000),
    ("three", 580000), ("system", 570000), ("being", 560000), ("found", 550000),
    ("based", 540000), ("high", 530000), ("any", 520000), ("different", 510000),
    ("study", 500000), ("number", 490000), ("part", 480000), ("results", 470000),
    ("very", 460000), ("known", 450000), ("water", 445000), ("made", 440000),
    ("large", 430000), ("work", 425000), ("within", 420000), ("form", 415000),
    ("often", 410000), ("large", 430000), ("group", 400000), ("own", 395000),
    ("model", 390000), ("year", 385000), ("years", 380000), ("world", 375000),
    ("those", 370000), ("data", 365000), ("important", 360000), ("before", 355000),
    ("must", 350000), ("should", 345000), ("effects", 340000), ("small", 335000),
    ("state", 330000), ("since", 325000), ("present", 320000), ("cells", 315000),
    ("level", 310000), ("including", 305000), ("called", 300000), ("show", 295000),
    ("shown", 290000), ("against", 285000), ("people", 280000), ("among", 275000),
    ("process", 270000), ("human", 265000), ("several", 260000), ("case", 255000),
    ("general", 250000), ("order", 245000), ("less", 240000), ("example", 235000),
    ("increase", 230000), ("species", 225000), ("development", 220000), ("like", 215000),
    ("type", 210000), ("provide", 205000), ("change", 200000), ("growth", 196000),
    ("function", 192000), ("research", 188000), ("structure", 184000), ("second", 180000),
    ("following", 176000), ("activity", 172000), ("effect", 168000), ("role", 164000),
    ("field", 160000), ("specific", 156000), ("studies", 152000), ("rate", 148000),
    ("possible", 144000), ("energy", 140000), ("levels", 136000), ("due", 132000),
    ("higher", 128000), ("observed", 124000), ("therefore", 120000), ("information", 117000),
    ("value", 114000), ("control", 111000), ("protein", 108000), ("response", 105000),
    ("approach", 102000), ("required", 100000),
]

# Frequency bands: (top, bottom) per 10^9 tokens; members get geometric
# spacing inside the band ordered alphabetically (deterministic).
BANDS = {
    "everyday": (95000.0, 20000.0),
    "extended": (20000.0, 4000.0),
    "academic": (4000.0, 800.0),
    "technical": (800.0, 150.0),
}

EVERYDAY = """
act again age air almost alone along already although always animal another answer anything area around
ask away back bad become begin behind believe best better big black blue body book bring build call came
car carry certain change child children city class close cold come common could country course cut day
days did does done door down early earth easy eat end enough even evening ever every everything eyes face
fact family far fast father feel few find fine fire five follow food foot four free friend front full
game gave get girl give given go going gone good got great green ground hand hands happen hard head hear
heard heart held help here high himself hold home hope hot hour house idea individual inside job just
keep kept kind knew know land last late later learn leave left let life light line list little live long
look looked low main make makes man matter mean means meet men might mind moment money month morning
mother move much music must name near need never news next night nothing now old once open order others
outside page paper parents past perhaps person place plan play point power probably problem put question
quite read ready real really right room run said saw say says school sea see seem seen sent set short
side simple six small something sometimes soon sound space stand start stay step still stop story study
sure take taken talk tell ten term things think third thought today together told took top toward town
try turn understand until upon us usually view voice want war watch way week went white whole why wide
wife without woman women word words write written wrong yes yet young
""".split()

EXTENDED = """
ability able above accept access account across action active actually add addition address administration
adult advance advantage affect afternoon agree agreement ahead allow almost alternative amount analysis
ancient announce annual apart apparent appear application apply appropriate approve argue argument arise
arm army arrange arrive article artist assume attempt attention attitude audience author authority
available average avoid award aware balance bank base basic basis bear beautiful bed benefit beyond bill
bit board boat born box break bridge brief broad brother budget busy buy campaign capable capital captain
card care career careful cause cell cent center central century ceremony chair challenge chance character
charge check chemical chief choice choose church circle citizen claim clean clear club coast collection
college color combination comfortable command comment commercial commission commit committee community
company compare competition complete complex computer concept concern conclusion condition conduct
conference confidence confirm conflict congress connect consider consist constant contact contain content
context continue contract contrast contribute convention conversation cost couple court cover create
credit crime critical cross crowd cultural culture current customer cycle daily danger dark date daughter
deal death debate decade decide decision deep defense define degree demand department depend describe
design desire despite detail determine develop device difference difficult direction director discover
discuss discussion disease distance distribution district divide doctor document dog double doubt draw
dream drive drop drug dry duty economic economy edge education effective effort eight element else
emerge emphasis employee encourage engine enter entire environment equal equipment error escape
especially essential establish estimate evaluate event evidence exactly examine excellent except exchange
exercise exist expect experience experiment expert explain express extend extent face factor fail fair
faith fall familiar famous farm fear feature federal feed fell female figure file fill film final finally
financial finger finish firm fish fit fix floor fly focus force foreign forest forget formal former forth
forward foundation frame freedom frequently fresh fruit fuel fun future gain garden gas gate gather
general generation gift glass global goal gold govern government grade grand grant gray growth guess gun
guy hair half hall hang happy hardly health heat heavy height hence herself history hit hole holiday
horse hospital hotel huge hundred husband ice image imagine impact importance impossible improve include
income increase indeed independent indicate industry influence initial injury instance instead
institution insurance intend interest internal international internet interview introduce investment
involve island issue item itself join joint judge jump justice key kill kitchen knowledge lack lady lake
language largely law lay lead leader learning legal length lesson letter library lie limit link lip
listen literature local locate location lose loss lost lot love machine magazine maintain major majority
male manage management manager manner map mark market marriage marry mass master match material maybe
measure mechanism media medical meeting member memory mention message metal method middle mile military
milk million minute miss mission mistake mix mode modern mostly mountain mouth movement movie myself
nation national natural nature nearly necessary neck negative neighbor network news nice nine none nor
normal north northern note notice notion object objective obtain obvious occasion occur ocean offer
office officer official oil okay operate operation opinion opportunity oppose option orange organization
original otherwise ought ourselves output owner pace pack package pain paint pair panel parent park
particular partner party pass passage path patient pattern pay peace people per percent perfect perform
performance period permit personal phase phone photo physical pick picture piece place plane plant
plastic plate platform player pleasure plenty pocket policy political poor popular population position
positive potential pound practical practice prepare presence president pressure pretty previous price
primary prime principle print prior private prize procedure produce product production professional
professor profit progress project promise promote proper property proportion proposal propose protect
prove public published pull purpose push quality quarter quick quickly quiet race radio raise range rapid
rare rather reach reaction reader reason recall receive recent recognize record red refer reform regard
region regular relate relation relationship relative release relevant religious remain remember remove
repeat replace reply represent request requirement residence resource respect respond rest result return
reveal review rich ride ring rise risk river road rock rule rush safe safety sale sample save scale scene
schedule scheme science score screen search season seat section sector secure security seek select sell
send senior sense series serious serve session seven shake shall shape share sharp shift ship shop
shoulder show sign significant silence silver similar simply sing single sister site situation size skill
skin sky sleep slightly slow smile social society soft software soil soldier solution somebody someone
son song sort source southern speak speaker speech speed spend spirit sport spot spread spring square
staff stage standard star statement station status step stick stock stone store strategy stream street
strength stress stretch strike strong student style subject success successful sudden suffer suggest
summer sun supply support suppose surely surface surprise survey survive switch table talk target task
taste tax teach teacher team technique technology telephone television tend test text thank theory
therefore thin thousand threat throw thus ticket tiny tip title tone tonight tool total touch tour trade
traditional traffic training transfer transform transition travel treat treatment tree trend trial trip
trouble truck true trust truth twelve twenty typical unique unit united unity universal update upper
urban useful user usual valley variety various vast vehicle version village visit vital volume vote wait
walk wall warm wave weak wealth weapon wear weather weekend weight welcome western whatever wheel whenever
whereas wherever whether wind window winter wish wonder wooden worth yard yellow yesterday
""".split()

ACADEMIC = """
abstract academic accuracy accurate acid acquisition adaptation adequate adjacent adjust algorithm
allocate alter alternative ambient amino analogous analyse analytic anomaly apparatus appendix applicable
approximate arbitrary array aspect assemble assess assessment assign assumption asymmetry atom atomic
attribute auxiliary axis bacteria bacterial baseline behaviour benchmark bias binary binding biological
biology biomass bond boundary calcium calculate calibration capacity carbon catalyst category causal
cellular channel chapter chromosome circuit citation classification classify climate clinical cluster
coefficient cognitive coherent collapse colleague column combination component composite composition
compound comprehensive comprise computation compute concentrate concentration conceptual conclude
concrete configuration confine consequence consequent conserve consistent constitute constraint construct
consume consumption contemporary contrary convergence conversion convert coordinate core correlate
correlation correspond cortex criteria criterion crucial crystal cumulative cycle dataset decline
decrease deduce defect deficiency definition demonstrate demonstrate denote density dependence deposit
depression deprivation derive detect detection diagnosis diagnostic diameter dielectric differential
diffusion dimension dioxide discrete displacement display dissolve distinct distinction distinguish
distribute diverse diversity domain dominant dominate dose duration dynamic dynamics ecological economic
ecosystem efficiency efficient electric electrical electron electronic eliminate embryo emission
empirical enable encode encounter energy enhance enzyme episode equation equilibrium equivalent
essentially estimate ethanol evaluation evolution evolutionary exceed exclude exhibit expansion expenditure
explicit exploit exposure external extract facilitate facility fault feedback fiber finite flexible flux
formation formula fraction fragment framework frequency fundamental fusion gender gene generate genetic
genome geographic geometry gradient graph gravity guideline habitat hence hierarchy highlight hormone
hypothesis identical identification identity immune implement implementation implication implicit imply
incidence incorporate index induce infection inference infinite inhibit inhibition initial initiate
innovation input insight instability integer integral integrate integration intensity interact
interaction interface intermediate interpret interpretation interval intrinsic invariant inverse
investigate investigation ion isolate isotope iteration kinetic laboratory laser latent lateral lattice
layer lemma lesion ligand likelihood linear linguistic lipid liquid literacy logic logical magnitude
maintenance mammal manipulate mapping margin marine matrix mature maximum mean measurement mechanical
mediate medium membrane metabolic metabolism metal metric microbial migration minimal minimum mode
modeling moderate modify module molecular molecule momentum monitor morphology mortality motif motor
mutant mutation namely negative neural neuron neutral nevertheless nitrogen node nonlinear norm normal
notably novel nucleus numerical nutrient objective observation obtain occurrence offset onset operator
optical optimal optimize orbit organic organism orientation origin oscillation outcome overall overlap
oxide oxygen parallel parameter partial particle passive pathway peak peptide perceive perception
periodic peripheral permanent perspective phase phenomena phenomenon philosophy photon physiological
plasma plausible polymer portion pose positive precise precision predict prediction predominantly
preliminary presume prevalence previous principal probability probe procedure proportion protein protocol
proxy publication qualitative quantify quantitative quantum radiation radical random rational receptor
reduction redundant refine regime region regression regulate regulation reinforce relevance reliability
reliable remote render replicate requirement resemble residual residue resistance resolution resonance
respective restore restrict retain retrieve reverse rigid robust rotation salt sampling saturation
scenario scheme scope secretion sediment seemingly segment selection semantic sensitive sensitivity
sensor sequence shaft shift signal significance significantly simulate simulation simultaneous sodium
solar solvent somewhat spatial specify specimen spectral spectrum sphere stability stable statistical
statistics stimulus strain stratum structural subsequent subset substance substantial substitute substrate
subtle sufficient sum summary supplement suppress survival sustain symbol symmetry synthesis systematic
systematically tackle taxonomy technical temporal tensor terminal theoretical theorem therapy thermal
thesis threshold tissue tolerance topic toxic trace tract trait trajectory transcription transformation
transient transmission transport trigger turbulence ultimate underlying undergo uniform unify unstable
uptake utility utilize valid validate validity vapor variable variance variation vector velocity verify
vertical viable vibration virtual virus visible visual vitro vivo voltage vulnerable wavelength whereas
widespread yield zone
""".split()

TECHNICAL = """
ablation abundance acoustic activation adsorption aerosol agonist albedo algebra alignment alkaline
allele allocation amplitude anion anisotropy annotation anode antibody antigen apoptosis aquifer archaea
assay astrophysics asymptotic atrophy attenuation autoimmune axon bandwidth baryon bayesian benthic
bilayer binding bioavailability biodiversity biomarker biopsy biosynthesis boson calibrate capacitance
carbonate catalysis cation causality chirality chloride chromatin chromatography circuitry cirrus
classifier clathrate coagulation codon cofactor cohort colloid combustion comorbidity conductance
conductivity confound conjugate convection convolution copolymer cosmology covariance crystalline
cytokine cytoplasm decay decoder decomposition deformation dendrite denitrification deposition
derivative desorption deuterium diffraction dimer diode dipole dislocation dispersion dissociation
dopamine dopant dosage drifting dwarfs eigenvalue elasticity electrode electrolyte electromagnetic
electrophoresis embryonic emittance encoder endocrine endothelial entropy epidemiology epigenetic
epithelial estuary eukaryote excitation exciton exoplanet extinction extrapolate fermentation fermion
ferromagnetic fibrosis filament firmware fluorescence fluoride formalism fractal fracture gauge gaussian
genomic genotype geochemical geospatial glacial glucose glutamate gluon graphene groundwater hadron
halide hamiltonian helium hemoglobin heterogeneous heuristic hippocampus histogram histone homogeneous
hydraulic hydrocarbon hydrolysis hydroxide hyperbolic hysteresis immunity impedance inductance inertia
infrared inhibitor insulator insulin interferometer interpolation interstellar invertebrate ionization
isomer isotropic kinase kinematics lagrangian laminar larva lattice leptons lesion lidar ligand lignin
limestone lithium lithosphere locus logistic luminosity lysine macrophage magma magnetization manifold
mantle markov mediator meiosis melanoma mesh metadata methane methylation microbiome microfluidic
micrometer microscopy mitigation mitochondria mitosis modulus monolayer monomer monsoon morphism mucosa
multivariate muon mutagenesis nanoparticle nanotube nebula nematode neurotransmitter neutrino neutron
niche nucleotide nucleation obesity oceanographic olfactory oligomer oncology ontology oocyte opacity
optimizer organelle orthogonal osmosis oxidation ozone paleoclimate pandemic parabolic paradigm parasite
pathogen pathology perturbation phenotype phonon phosphate photolysis photosynthesis phylogeny physiology
phytoplankton piezoelectric pigment pixel placebo planetary plankton plasmid plasticity polarity
polarization pollen polymerase polynomial porosity positron posterior precipitation precursor predator
prefrontal prion prognosis prokaryote promoter proton provenance pulsar quadratic qualitatively quark
quasar qubit radionuclide recombination redox redshift refraction regolith remission renormalization
resilience retina rheology rhizosphere ribosome salinity sapphire scalar scattering schema sclerosis
seismic semiconductor senescence sepsis serotonin serum silicate silicon simulator sinusoidal solvation
spectroscopy spintronics sporadic stochastic stratosphere striatum subduction sublimation subspace
substrate sulfate sulfur superconductor supernova surfactant symbiosis synapse synaptic syntax
tectonic telemetry telomere tensorial terrain thermodynamic thermosphere thromboembolism titanium
tomography topology toxicity toxin transducer transistor translocation turbine ultrasound ultraviolet
uncertainty upwelling vaccine variant vascular ventral vertex viscosity volatile vortex wavelet wetland
xenon zeolite zygote
""".split()


def band_frequencies(words: list[str], top: float, bottom: float) -> dict[str, float]:
    uniq = sorted(set(w.lower() for w in words if w.strip()))
    out = {}
    n = len(uniq)
    for i, w in enumerate(uniq):
        frac = i / max(n - 1, 1)
        out[w] = top * math.exp(frac * math.log(bottom / top))
    return out


def main() -> None:
    table: dict[str, float] = {}
    for name, words in (("technical", TECHNICAL), ("academic", ACADEMIC),
                        ("extended", EXTENDED), ("everyday", EVERYDAY)):
        top, bottom = BANDS[name]
        table.update(band_frequencies(words, top, bottom))
    for word, freq in HEAD:  # head list wins over any band assignment
        table[word.lower()] = float(freq)
    table = {w: f for w, f in table.items() if all(ord(c) < 128 for c in w)}

    lines = [f"# version: {VERSION}",
             "# word<TAB>frequency per 10^9 tokens; approximate bundled table.",
             "# Rebuild a real table from a Wikipedia dump word count with",
             "# scripts/build_freq_table.py and pass it via --freq-table."]
    for w in sorted(table):
        lines.append(f"{w}\t{table[w]:.6g}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {OUT} with {len(table)} entries")


if __name__ == "__main__":
    main()
