#pragma once

#include <string_view>

#include "runtime.hpp"

namespace lexintel::snowball {

// Suffix tables from the Snowball stemming project (BSD-3-Clause), version 3.1.1.
// Each entry maps a suffix to the among-result used by the stemming routines.

// NOLINTBEGIN
namespace spanish {
inline constexpr Among k_a_0[] = {{U"", 6}, {U"á", 1}, {U"é", 2}, {U"í", 3}, {U"ó", 4}, {U"ú", 5}};
inline constexpr Among k_a_1[] = {{U"la", -1}, {U"sela", -1}, {U"le", -1}, {U"me", -1}, {U"se", -1}, {U"lo", -1}, {U"selo", -1}, {U"las", -1}, {U"selas", -1}, {U"les", -1}, {U"los", -1}, {U"selos", -1}, {U"nos", -1}};
inline constexpr Among k_a_2[] = {{U"ando", 6}, {U"iendo", 6}, {U"yendo", 7}, {U"ándo", 2}, {U"iéndo", 1}, {U"ar", 6}, {U"er", 6}, {U"ir", 6}, {U"ár", 3}, {U"ér", 4}, {U"ír", 5}};
inline constexpr Among k_a_3[] = {{U"ic", -1}, {U"ad", -1}, {U"os", -1}, {U"iv", 1}};
inline constexpr Among k_a_4[] = {{U"able", 1}, {U"ible", 1}, {U"ante", 1}};
inline constexpr Among k_a_5[] = {{U"ic", 1}, {U"abil", 1}, {U"iv", 1}};
inline constexpr Among k_a_6[] = {{U"ica", 1}, {U"ancia", 2}, {U"encia", 5}, {U"adora", 2}, {U"osa", 1}, {U"ista", 1}, {U"iva", 9}, {U"anza", 1}, {U"logía", 3}, {U"idad", 8}, {U"able", 1}, {U"ible", 1}, {U"ante", 2}, {U"mente", 7}, {U"amente", 6}, {U"acion", 2}, {U"ucion", 4}, {U"ación", 2}, {U"ución", 4}, {U"ico", 1}, {U"ismo", 1}, {U"oso", 1}, {U"amiento", 1}, {U"imiento", 1}, {U"ivo", 9}, {U"ador", 2}, {U"icas", 1}, {U"ancias", 2}, {U"encias", 5}, {U"adoras", 2}, {U"osas", 1}, {U"istas", 1}, {U"ivas", 9}, {U"anzas", 1}, {U"logías", 3}, {U"idades", 8}, {U"ables", 1}, {U"ibles", 1}, {U"aciones", 2}, {U"uciones", 4}, {U"adores", 2}, {U"antes", 2}, {U"icos", 1}, {U"ismos", 1}, {U"osos", 1}, {U"amientos", 1}, {U"imientos", 1}, {U"ivos", 9}};
inline constexpr Among k_a_7[] = {{U"ya", 1}, {U"ye", 1}, {U"yan", 1}, {U"yen", 1}, {U"yeron", 1}, {U"yendo", 1}, {U"yo", 1}, {U"yas", 1}, {U"yes", 1}, {U"yais", 1}, {U"yamos", 1}, {U"yó", 1}};
inline constexpr Among k_a_8[] = {{U"aba", 2}, {U"ada", 2}, {U"ida", 2}, {U"ara", 2}, {U"iera", 2}, {U"ía", 2}, {U"aría", 2}, {U"ería", 2}, {U"iría", 2}, {U"ad", 2}, {U"ed", 2}, {U"id", 2}, {U"ase", 2}, {U"iese", 2}, {U"aste", 2}, {U"iste", 2}, {U"an", 2}, {U"aban", 2}, {U"aran", 2}, {U"ieran", 2}, {U"ían", 2}, {U"arían", 2}, {U"erían", 2}, {U"irían", 2}, {U"en", 1}, {U"asen", 2}, {U"iesen", 2}, {U"aron", 2}, {U"ieron", 2}, {U"arán", 2}, {U"erán", 2}, {U"irán", 2}, {U"ado", 2}, {U"ido", 2}, {U"ando", 2}, {U"iendo", 2}, {U"ar", 2}, {U"er", 2}, {U"ir", 2}, {U"as", 2}, {U"abas", 2}, {U"adas", 2}, {U"idas", 2}, {U"aras", 2}, {U"ieras", 2}, {U"ías", 2}, {U"arías", 2}, {U"erías", 2}, {U"irías", 2}, {U"es", 1}, {U"ases", 2}, {U"ieses", 2}, {U"abais", 2}, {U"arais", 2}, {U"ierais", 2}, {U"íais", 2}, {U"aríais", 2}, {U"eríais", 2}, {U"iríais", 2}, {U"aseis", 2}, {U"ieseis", 2}, {U"asteis", 2}, {U"isteis", 2}, {U"áis", 2}, {U"éis", 1}, {U"aréis", 2}, {U"eréis", 2}, {U"iréis", 2}, {U"ados", 2}, {U"idos", 2}, {U"amos", 2}, {U"ábamos", 2}, {U"áramos", 2}, {U"iéramos", 2}, {U"íamos", 2}, {U"aríamos", 2}, {U"eríamos", 2}, {U"iríamos", 2}, {U"emos", 1}, {U"aremos", 2}, {U"eremos", 2}, {U"iremos", 2}, {U"ásemos", 2}, {U"iésemos", 2}, {U"imos", 2}, {U"arás", 2}, {U"erás", 2}, {U"irás", 2}, {U"ís", 2}, {U"ará", 2}, {U"erá", 2}, {U"irá", 2}, {U"aré", 2}, {U"eré", 2}, {U"iré", 2}, {U"ió", 2}};
inline constexpr Among k_a_9[] = {{U"a", 1}, {U"e", 2}, {U"o", 1}, {U"os", 1}, {U"á", 1}, {U"é", 2}, {U"í", 1}, {U"ó", 1}};
inline constexpr std::u32string_view k_g_v = U"aeiouáéíóúü";
}  // namespace spanish

namespace french {
inline constexpr Among k_a_0[] = {{U"col", -1}, {U"ni", 1}, {U"par", -1}, {U"tap", -1}};
inline constexpr Among k_a_1[] = {{U"", 7}, {U"H", 6}, {U"He", 4}, {U"Hi", 5}, {U"I", 1}, {U"U", 2}, {U"Y", 3}};
inline constexpr Among k_a_2[] = {{U"iqU", 3}, {U"abl", 3}, {U"Ièr", 4}, {U"ièr", 4}, {U"eus", 2}, {U"iv", 1}};
inline constexpr Among k_a_3[] = {{U"ic", 2}, {U"abil", 1}, {U"iv", 3}};
inline constexpr Among k_a_4[] = {{U"iqUe", 1}, {U"atrice", 2}, {U"ance", 1}, {U"ence", 5}, {U"logie", 3}, {U"able", 1}, {U"isme", 1}, {U"euse", 12}, {U"iste", 1}, {U"ive", 8}, {U"if", 8}, {U"usion", 4}, {U"ation", 2}, {U"ution", 4}, {U"ateur", 2}, {U"iqUes", 1}, {U"atrices", 2}, {U"ances", 1}, {U"ences", 5}, {U"logies", 3}, {U"ables", 1}, {U"ismes", 1}, {U"euses", 12}, {U"istes", 1}, {U"ives", 8}, {U"ifs", 8}, {U"usions", 4}, {U"ations", 2}, {U"utions", 4}, {U"ateurs", 2}, {U"ments", 16}, {U"ements", 6}, {U"issements", 13}, {U"ités", 7}, {U"ment", 16}, {U"ement", 6}, {U"issement", 13}, {U"amment", 14}, {U"emment", 15}, {U"aux", 10}, {U"eaux", 9}, {U"eux", 1}, {U"oux", 11}, {U"ité", 7}};
inline constexpr Among k_a_5[] = {{U"ira", 1}, {U"ie", 1}, {U"isse", 1}, {U"issante", 1}, {U"i", 1}, {U"irai", 1}, {U"ir", 1}, {U"iras", 1}, {U"ies", 1}, {U"îmes", 1}, {U"isses", 1}, {U"issantes", 1}, {U"îtes", 1}, {U"is", 1}, {U"irais", 1}, {U"issais", 1}, {U"irions", 1}, {U"issions", 1}, {U"irons", 1}, {U"issons", 1}, {U"issants", 1}, {U"it", 1}, {U"irait", 1}, {U"issait", 1}, {U"issant", 1}, {U"iraIent", 1}, {U"issaIent", 1}, {U"irent", 1}, {U"issent", 1}, {U"iront", 1}, {U"ît", 1}, {U"iriez", 1}, {U"issiez", 1}, {U"irez", 1}, {U"issez", 1}};
inline constexpr Among k_a_6[] = {{U"al", 1}, {U"épl", -1}, {U"auv", -1}};
inline constexpr Among k_a_7[] = {{U"a", 3}, {U"era", 2}, {U"aise", 4}, {U"asse", 3}, {U"ante", 3}, {U"ée", 2}, {U"ai", 3}, {U"erai", 2}, {U"er", 2}, {U"as", 3}, {U"eras", 2}, {U"âmes", 3}, {U"aises", 4}, {U"asses", 3}, {U"antes", 3}, {U"âtes", 3}, {U"ées", 2}, {U"ais", 4}, {U"eais", 2}, {U"erais", 2}, {U"ions", 1}, {U"erions", 2}, {U"assions", 3}, {U"erons", 2}, {U"ants", 3}, {U"és", 2}, {U"ait", 3}, {U"erait", 2}, {U"ant", 3}, {U"aIent", 3}, {U"eraIent", 2}, {U"èrent", 2}, {U"assent", 3}, {U"eront", 2}, {U"ât", 3}, {U"ez", 2}, {U"iez", 2}, {U"eriez", 2}, {U"assiez", 3}, {U"erez", 2}, {U"é", 2}};
inline constexpr Among k_a_8[] = {{U"e", 3}, {U"Ière", 2}, {U"ière", 2}, {U"ion", 1}, {U"Ier", 2}, {U"ier", 2}};
inline constexpr Among k_a_9[] = {{U"ell", -1}, {U"eill", -1}, {U"enn", -1}, {U"onn", -1}, {U"ett", -1}};
inline constexpr std::u32string_view k_g_elision_char = U"cdjlmnst";
inline constexpr std::u32string_view k_g_keep_with_s = U"aiosuè";
inline constexpr std::u32string_view k_g_oux_ending = U"bhjlnp";
inline constexpr std::u32string_view k_g_v = U"aeiouyàâèéêëîïôùû";
}  // namespace french

namespace italian {
inline constexpr Among k_a_0[] = {{U"all'", -1}, {U"d'", -1}, {U"dall'", -1}, {U"dell'", -1}, {U"gl'", -1}, {U"l'", -1}, {U"m'", -1}, {U"nell'", -1}, {U"quell'", -1}, {U"quest'", -1}, {U"s'", -1}, {U"sull'", -1}, {U"t'", -1}, {U"tutt'", -1}, {U"un'", -1}, {U"v'", -1}};
inline constexpr Among k_a_1[] = {{U"", 7}, {U"qu", 6}, {U"á", 1}, {U"é", 2}, {U"í", 3}, {U"ó", 4}, {U"ú", 5}};
inline constexpr Among k_a_2[] = {{U"", 3}, {U"I", 1}, {U"U", 2}};
inline constexpr Among k_a_3[] = {{U"la", -1}, {U"cela", -1}, {U"gliela", -1}, {U"mela", -1}, {U"tela", -1}, {U"vela", -1}, {U"le", -1}, {U"cele", -1}, {U"gliele", -1}, {U"mele", -1}, {U"tele", -1}, {U"vele", -1}, {U"ne", -1}, {U"cene", -1}, {U"gliene", -1}, {U"mene", -1}, {U"sene", -1}, {U"tene", -1}, {U"vene", -1}, {U"ci", -1}, {U"li", -1}, {U"celi", -1}, {U"glieli", -1}, {U"meli", -1}, {U"teli", -1}, {U"veli", -1}, {U"gli", -1}, {U"mi", -1}, {U"si", -1}, {U"ti", -1}, {U"vi", -1}, {U"lo", -1}, {U"celo", -1}, {U"glielo", -1}, {U"melo", -1}, {U"telo", -1}, {U"velo", -1}};
inline constexpr Among k_a_4[] = {{U"ando", 1}, {U"endo", 1}, {U"ar", 2}, {U"er", 2}, {U"ir", 2}};
inline constexpr Among k_a_5[] = {{U"ic", -1}, {U"abil", -1}, {U"os", -1}, {U"iv", 1}};
inline constexpr Among k_a_6[] = {{U"ic", 1}, {U"abil", 1}, {U"iv", 1}};
inline constexpr Among k_a_7[] = {{U"ica", 1}, {U"logia", 3}, {U"osa", 1}, {U"ista", 1}, {U"iva", 9}, {U"anza", 1}, {U"enza", 5}, {U"ice", 1}, {U"atrice", 1}, {U"iche", 1}, {U"logie", 3}, {U"abile", 1}, {U"ibile", 1}, {U"usione", 4}, {U"azione", 2}, {U"uzione", 4}, {U"atore", 2}, {U"ose", 1}, {U"ante", 1}, {U"mente", 1}, {U"amente", 7}, {U"iste", 1}, {U"ive", 9}, {U"anze", 1}, {U"enze", 5}, {U"ici", 1}, {U"atrici", 1}, {U"ichi", 1}, {U"abili", 1}, {U"ibili", 1}, {U"ismi", 1}, {U"usioni", 4}, {U"azioni", 2}, {U"uzioni", 4}, {U"atori", 2}, {U"osi", 1}, {U"anti", 1}, {U"amenti", 6}, {U"imenti", 6}, {U"isti", 1}, {U"ivi", 9}, {U"ico", 1}, {U"ismo", 1}, {U"oso", 1}, {U"amento", 6}, {U"imento", 6}, {U"ivo", 9}, {U"ità", 8}, {U"istà", 1}, {U"istè", 1}, {U"istì", 1}};
inline constexpr Among k_a_8[] = {{U"isca", 1}, {U"enda", 1}, {U"ata", 1}, {U"ita", 1}, {U"uta", 1}, {U"ava", 1}, {U"eva", 1}, {U"iva", 1}, {U"erebbe", 1}, {U"irebbe", 1}, {U"isce", 1}, {U"ende", 1}, {U"are", 1}, {U"ere", 1}, {U"ire", 1}, {U"asse", 1}, {U"ate", 1}, {U"avate", 1}, {U"evate", 1}, {U"ivate", 1}, {U"ete", 1}, {U"erete", 1}, {U"irete", 1}, {U"ite", 1}, {U"ereste", 1}, {U"ireste", 1}, {U"ute", 1}, {U"erai", 1}, {U"irai", 1}, {U"isci", 1}, {U"endi", 1}, {U"erei", 1}, {U"irei", 1}, {U"assi", 1}, {U"ati", 1}, {U"iti", 1}, {U"eresti", 1}, {U"iresti", 1}, {U"uti", 1}, {U"avi", 1}, {U"evi", 1}, {U"ivi", 1}, {U"isco", 1}, {U"ando", 1}, {U"endo", 1}, {U"Yamo", 1}, {U"iamo", 1}, {U"avamo", 1}, {U"evamo", 1}, {U"ivamo", 1}, {U"eremo", 1}, {U"iremo", 1}, {U"assimo", 1}, {U"ammo", 1}, {U"emmo", 1}, {U"eremmo", 1}, {U"iremmo", 1}, {U"immo", 1}, {U"ano", 1}, {U"iscano", 1}, {U"avano", 1}, {U"evano", 1}, {U"ivano", 1}, {U"eranno", 1}, {U"iranno", 1}, {U"ono", 1}, {U"iscono", 1}, {U"arono", 1}, {U"erono", 1}, {U"irono", 1}, {U"erebbero", 1}, {U"irebbero", 1}, {U"assero", 1}, {U"essero", 1}, {U"issero", 1}, {U"ato", 1}, {U"ito", 1}, {U"uto", 1}, {U"avo", 1}, {U"evo", 1}, {U"ivo", 1}, {U"ar", 1}, {U"ir", 1}, {U"erà", 1}, {U"irà", 1}, {U"erò", 1}, {U"irò", 1}};
inline constexpr std::u32string_view k_as_4[] = {U"", U"e"};
inline constexpr std::u32string_view k_g_AEIO = U"aeioàèìò";
inline constexpr std::u32string_view k_g_CG = U"cg";
inline constexpr std::u32string_view k_g_v = U"aeiouàèìòù";
}  // namespace italian

namespace portuguese {
inline constexpr Among k_a_0[] = {{U"", 3}, {U"ã", 1}, {U"õ", 2}};
inline constexpr Among k_a_1[] = {{U"", 3}, {U"a~", 1}, {U"o~", 2}};
inline constexpr Among k_a_2[] = {{U"ic", -1}, {U"ad", -1}, {U"os", -1}, {U"iv", 1}};
inline constexpr Among k_a_3[] = {{U"ante", 1}, {U"avel", 1}, {U"ível", 1}};
inline constexpr Among k_a_4[] = {{U"ic", 1}, {U"abil", 1}, {U"iv", 1}};
inline constexpr Among k_a_5[] = {{U"ica", 1}, {U"ância", 1}, {U"ência", 4}, {U"logia", 2}, {U"ira", 9}, {U"adora", 1}, {U"osa", 1}, {U"ista", 1}, {U"iva", 8}, {U"eza", 1}, {U"idade", 7}, {U"ante", 1}, {U"mente", 6}, {U"amente", 5}, {U"ável", 1}, {U"ível", 1}, {U"ico", 1}, {U"ismo", 1}, {U"oso", 1}, {U"amento", 1}, {U"imento", 1}, {U"ivo", 8}, {U"aça~o", 1}, {U"uça~o", 3}, {U"ador", 1}, {U"icas", 1}, {U"ências", 4}, {U"logias", 2}, {U"iras", 9}, {U"adoras", 1}, {U"osas", 1}, {U"istas", 1}, {U"ivas", 8}, {U"ezas", 1}, {U"idades", 7}, {U"adores", 1}, {U"antes", 1}, {U"aço~es", 1}, {U"uço~es", 3}, {U"icos", 1}, {U"ismos", 1}, {U"osos", 1}, {U"amentos", 1}, {U"imentos", 1}, {U"ivos", 8}};
inline constexpr Among k_a_6[] = {{U"ada", 1}, {U"ida", 1}, {U"ia", 1}, {U"aria", 1}, {U"eria", 1}, {U"iria", 1}, {U"ara", 1}, {U"era", 1}, {U"ira", 1}, {U"ava", 1}, {U"asse", 1}, {U"esse", 1}, {U"isse", 1}, {U"aste", 1}, {U"este", 1}, {U"iste", 1}, {U"ei", 1}, {U"arei", 1}, {U"erei", 1}, {U"irei", 1}, {U"am", 1}, {U"iam", 1}, {U"ariam", 1}, {U"eriam", 1}, {U"iriam", 1}, {U"aram", 1}, {U"eram", 1}, {U"iram", 1}, {U"avam", 1}, {U"em", 1}, {U"arem", 1}, {U"erem", 1}, {U"irem", 1}, {U"assem", 1}, {U"essem", 1}, {U"issem", 1}, {U"ado", 1}, {U"ido", 1}, {U"ando", 1}, {U"endo", 1}, {U"indo", 1}, {U"ara~o", 1}, {U"era~o", 1}, {U"ira~o", 1}, {U"ar", 1}, {U"er", 1}, {U"ir", 1}, {U"as", 1}, {U"adas", 1}, {U"idas", 1}, {U"ias", 1}, {U"arias", 1}, {U"erias", 1}, {U"irias", 1}, {U"aras", 1}, {U"eras", 1}, {U"iras", 1}, {U"avas", 1}, {U"es", 1}, {U"ardes", 1}, {U"erdes", 1}, {U"irdes", 1}, {U"ares", 1}, {U"eres", 1}, {U"ires", 1}, {U"asses", 1}, {U"esses", 1}, {U"isses", 1}, {U"astes", 1}, {U"estes", 1}, {U"istes", 1}, {U"is", 1}, {U"ais", 1}, {U"eis", 1}, {U"areis", 1}, {U"ereis", 1}, {U"ireis", 1}, {U"áreis", 1}, {U"éreis", 1}, {U"íreis", 1}, {U"ásseis", 1}, {U"ésseis", 1}, {U"ísseis", 1}, {U"áveis", 1}, {U"íeis", 1}, {U"aríeis", 1}, {U"eríeis", 1}, {U"iríeis", 1}, {U"ados", 1}, {U"idos", 1}, {U"amos", 1}, {U"áramos", 1}, {U"éramos", 1}, {U"íramos", 1}, {U"ávamos", 1}, {U"íamos", 1}, {U"aríamos", 1}, {U"eríamos", 1}, {U"iríamos", 1}, {U"emos", 1}, {U"aremos", 1}, {U"eremos", 1}, {U"iremos", 1}, {U"ássemos", 1}, {U"êssemos", 1}, {U"íssemos", 1}, {U"imos", 1}, {U"armos", 1}, {U"ermos", 1}, {U"irmos", 1}, {U"ámos", 1}, {U"arás", 1}, {U"erás", 1}, {U"irás", 1}, {U"eu", 1}, {U"iu", 1}, {U"ou", 1}, {U"ará", 1}, {U"erá", 1}, {U"irá", 1}};
inline constexpr Among k_a_7[] = {{U"a", 1}, {U"i", 1}, {U"o", 1}, {U"os", 1}, {U"á", 1}, {U"í", 1}, {U"ó", 1}};
inline constexpr Among k_a_8[] = {{U"e", 1}, {U"ç", 2}, {U"é", 1}, {U"ê", 1}};
inline constexpr std::u32string_view k_g_v = U"aeiouáâéêíóôú";
}  // namespace portuguese

namespace romanian {
inline constexpr Among k_a_0[] = {{U"ş", 1}, {U"ţ", 2}};
inline constexpr Among k_a_1[] = {{U"", 3}, {U"I", 1}, {U"U", 2}};
inline constexpr Among k_a_2[] = {{U"ea", 3}, {U"ația", 7}, {U"aua", 2}, {U"iua", 4}, {U"ație", 7}, {U"ele", 3}, {U"ile", 5}, {U"iile", 4}, {U"iei", 4}, {U"atei", 6}, {U"ii", 4}, {U"ului", 1}, {U"ul", 1}, {U"elor", 3}, {U"ilor", 4}, {U"iilor", 4}};
inline constexpr Among k_a_3[] = {{U"icala", 4}, {U"iciva", 4}, {U"ativa", 5}, {U"itiva", 6}, {U"icale", 4}, {U"ațiune", 5}, {U"ițiune", 6}, {U"atoare", 5}, {U"itoare", 6}, {U"ătoare", 5}, {U"icitate", 4}, {U"abilitate", 1}, {U"ibilitate", 2}, {U"ivitate", 3}, {U"icive", 4}, {U"ative", 5}, {U"itive", 6}, {U"icali", 4}, {U"atori", 5}, {U"icatori", 4}, {U"itori", 6}, {U"ători", 5}, {U"icitati", 4}, {U"abilitati", 1}, {U"ivitati", 3}, {U"icivi", 4}, {U"ativi", 5}, {U"itivi", 6}, {U"icităi", 4}, {U"abilităi", 1}, {U"ivităi", 3}, {U"icități", 4}, {U"abilități", 1}, {U"ivități", 3}, {U"ical", 4}, {U"ator", 5}, {U"icator", 4}, {U"itor", 6}, {U"ător", 5}, {U"iciv", 4}, {U"ativ", 5}, {U"itiv", 6}, {U"icală", 4}, {U"icivă", 4}, {U"ativă", 5}, {U"itivă", 6}};
inline constexpr Among k_a_4[] = {{U"ica", 1}, {U"abila", 1}, {U"ibila", 1}, {U"oasa", 1}, {U"ata", 1}, {U"ita", 1}, {U"anta", 1}, {U"ista", 3}, {U"uta", 1}, {U"iva", 1}, {U"ic", 1}, {U"ice", 1}, {U"abile", 1}, {U"ibile", 1}, {U"isme", 3}, {U"iune", 2}, {U"oase", 1}, {U"ate", 1}, {U"itate", 1}, {U"ite", 1}, {U"ante", 1}, {U"iste", 3}, {U"ute", 1}, {U"ive", 1}, {U"ici", 1}, {U"abili", 1}, {U"ibili", 1}, {U"iuni", 2}, {U"atori", 1}, {U"osi", 1}, {U"ati", 1}, {U"itati", 1}, {U"iti", 1}, {U"anti", 1}, {U"isti", 3}, {U"uti", 1}, {U"iști", 3}, {U"ivi", 1}, {U"ităi", 1}, {U"oși", 1}, {U"ități", 1}, {U"abil", 1}, {U"ibil", 1}, {U"ism", 3}, {U"ator", 1}, {U"os", 1}, {U"at", 1}, {U"it", 1}, {U"ant", 1}, {U"ist", 3}, {U"ut", 1}, {U"iv", 1}, {U"ică", 1}, {U"abilă", 1}, {U"ibilă", 1}, {U"oasă", 1}, {U"ată", 1}, {U"ită", 1}, {U"antă", 1}, {U"istă", 3}, {U"ută", 1}, {U"ivă", 1}};
inline constexpr Among k_a_5[] = {{U"ea", 1}, {U"ia", 1}, {U"esc", 1}, {U"ăsc", 1}, {U"ind", 1}, {U"ând", 1}, {U"are", 1}, {U"ere", 1}, {U"ire", 1}, {U"âre", 1}, {U"se", 2}, {U"ase", 1}, {U"sese", 2}, {U"ise", 1}, {U"use", 1}, {U"âse", 1}, {U"ește", 1}, {U"ăște", 1}, {U"eze", 1}, {U"ai", 1}, {U"eai", 1}, {U"iai", 1}, {U"sei", 2}, {U"ești", 1}, {U"ăști", 1}, {U"ui", 1}, {U"ezi", 1}, {U"âi", 1}, {U"ași", 1}, {U"seși", 2}, {U"aseși", 1}, {U"seseși", 2}, {U"iseși", 1}, {U"useși", 1}, {U"âseși", 1}, {U"iși", 1}, {U"uși", 1}, {U"âși", 1}, {U"ați", 2}, {U"eați", 1}, {U"iați", 1}, {U"eți", 2}, {U"iți", 2}, {U"âți", 2}, {U"arăți", 1}, {U"serăți", 2}, {U"aserăți", 1}, {U"seserăți", 2}, {U"iserăți", 1}, {U"userăți", 1}, {U"âserăți", 1}, {U"irăți", 1}, {U"urăți", 1}, {U"ârăți", 1}, {U"am", 1}, {U"eam", 1}, {U"iam", 1}, {U"em", 2}, {U"asem", 1}, {U"sesem", 2}, {U"isem", 1}, {U"usem", 1}, {U"âsem", 1}, {U"im", 2}, {U"âm", 2}, {U"ăm", 2}, {U"arăm", 1}, {U"serăm", 2}, {U"aserăm", 1}, {U"seserăm", 2}, {U"iserăm", 1}, {U"userăm", 1}, {U"âserăm", 1}, {U"irăm", 1}, {U"urăm", 1}, {U"ârăm", 1}, {U"au", 1}, {U"eau", 1}, {U"iau", 1}, {U"indu", 1}, {U"ându", 1}, {U"ez", 1}, {U"ească", 1}, {U"ară", 1}, {U"seră", 2}, {U"aseră", 1}, {U"seseră", 2}, {U"iseră", 1}, {U"useră", 1}, {U"âseră", 1}, {U"iră", 1}, {U"ură", 1}, {U"âră", 1}, {U"ează", 1}};
inline constexpr Among k_a_6[] = {{U"a", 1}, {U"e", 1}, {U"ie", 1}, {U"i", 1}, {U"ă", 1}};
inline constexpr std::u32string_view k_as_0[] = {U"ș", U"ț"};
inline constexpr std::u32string_view k_as_3[] = {U"abil", U"ibil", U"iv", U"ic", U"at", U"it"};
inline constexpr std::u32string_view k_g_v = U"aeiouâîă";
}  // namespace romanian

// NOLINTEND
}  // namespace lexintel::snowball
