"""Seed word lists for the non-English locales."""

ES = dict(
    feminine="""María Carmen Ana Isabel Laura Cristina Marta Lucía Elena Pilar Rosa Sara Paula Raquel Beatriz Silvia Patricia Nuria Rocío Teresa Mercedes Alicia Irene Sofía Claudia Andrea Julia Alba Inés Noelia Lorena Eva Natalia Miriam Verónica Sonia Montserrat Dolores Rosario Concepción Inmaculada Esther Victoria Yolanda Encarnación Ángela Lidia Adriana Carla""".split(),
    masculine="""Antonio José Manuel Francisco David Juan Javier Daniel Carlos Jesús Alejandro Miguel Rafael Pablo Pedro Ángel Sergio Fernando Jorge Luis Alberto Álvaro Diego Adrián Raúl Enrique Ramón Vicente Iván Rubén Óscar Andrés Joaquín Santiago Eduardo Víctor Roberto Jaime Mario Ignacio Alfonso Salvador Ricardo Marcos Emilio Gonzalo Hugo Guillermo""".split(),
    surname="""García Rodríguez González Fernández López Martínez Sánchez Pérez Gómez Martín Jiménez Ruiz Hernández Díaz Moreno Muñoz Álvarez Romero Alonso Gutiérrez Navarro Torres Domínguez Vázquez Ramos Gil Ramírez Serrano Blanco Molina Morales Suárez Ortega Delgado Castro Ortiz Rubio Marín Sanz Núñez Iglesias Medina Garrido Cortés Castillo Santos Lozano Guerrero Cano Prieto""".split(),
    city="""Madrid|Barcelona|Valencia|Sevilla|Zaragoza|Málaga|Murcia|Palma|Bilbao|Alicante|Córdoba|Valladolid|Vigo|Gijón|Granada|Vitoria|Elche|Oviedo|Badalona|Cartagena|Terrassa|Jerez|Sabadell|Móstoles|Alcalá de Henares|Pamplona|Fuenlabrada|Almería|Leganés|San Sebastián|Santander|Castellón|Burgos|Albacete|Getafe|Salamanca|Logroño|Huelva|Badajoz|Tarragona|León|Cádiz|Lleida|Marbella|Jaén|Ourense|Girona|Lugo|Cáceres|Toledo|Segovia|Ávila""".split("|"),
    state="""Andalucía|Aragón|Asturias|Islas Baleares|Canarias|Cantabria|Castilla y León|Castilla-La Mancha|Cataluña|Comunidad Valenciana|Extremadura|Galicia|La Rioja|Comunidad de Madrid|Región de Murcia|Navarra|País Vasco|Ceuta|Melilla|A Coruña|Álava|Alicante|Almería|Badajoz|Barcelona|Burgos|Cáceres|Cádiz|Castellón|Ciudad Real|Córdoba|Cuenca|Girona|Granada|Guadalajara|Huelva|Huesca|Jaén|León|Lleida|Lugo|Málaga|Ourense|Palencia|Pontevedra|Salamanca|Segovia|Sevilla|Soria|Tarragona|Teruel|Toledo|Valladolid|Zamora|Zaragoza""".split("|"),
    streets="Mayor|Real|de Alcalá|Gran Vía|de Serrano|del Sol|de la Paz|de San Juan|de Cervantes|de Goya|de Velázquez|de Colón|de Hernán Cortés|de Santa Ana|del Carmen|de Valencia|de Toledo|Nueva|Ancha|del Prado".split("|"),
    street_suffix="Calle|Avenida|Paseo|Plaza".split("|"),
    address_formats=["{suffix} {street}, {num}", "{suffix} {street} {num}"],
    hospital_formats=["Hospital Universitario de {city}", "Hospital General de {city}", "Hospital {saint}", "Clínica {surname}"],
    company_formats=["{surname} y Asociados S.L.", "Grupo {surname}", "{surname} S.A.", "Construcciones {surname}"],
    university_formats=["Universidad de {city}", "Universidad Politécnica de {city}", "Universidad Autónoma de {city}"],
    email_first="maria jose carmen antonio lucia javier elena pablo".split(),
    email_last="garcia lopez martinez sanchez perez gomez".split(),
    email_domain="gmail.com hotmail.es yahoo.es telefonica.net".split(),
    phone=["+34 ### ### ###", "9## ## ## ##", "6## ### ###"],
    date=["{dd}/{mm}/{yyyy}", "{d}/{m}/{yyyy}"],
    email=["{user}@{domain}"],
    other=["########?", "##########"],
    name_format="{first} {last}",
    countries="""España|Francia|Alemania|Italia|Portugal|Reino Unido|Irlanda|Países Bajos|Bélgica|Suiza|Austria|Suecia|Noruega|Dinamarca|Finlandia|Polonia|Grecia|Turquía|Rusia|Ucrania|Marruecos|Argelia|Egipto|Nigeria|Sudáfrica|Kenia|Estados Unidos|Canadá|México|Guatemala|Honduras|Nicaragua|Costa Rica|Panamá|Cuba|República Dominicana|Colombia|Venezuela|Ecuador|Perú|Bolivia|Chile|Argentina|Uruguay|Paraguay|Brasil|China|Japón|India|Filipinas|Australia|Corea del Sur""".split("|"),
    saints="San Juan de Dios|Santa Cristina|San Rafael|Virgen del Rocío|La Paz|La Fe|Niño Jesús|San Carlos|San Cecilio|Santa Lucía".split("|"),
)

FR = dict(
    feminine="""Marie Nathalie Isabelle Sylvie Catherine Martine Christine Françoise Valérie Sandrine Stéphanie Véronique Sophie Céline Chantal Patricia Anne Brigitte Julie Monique Aurélie Nicole Laurence Émilie Caroline Virginie Camille Chloé Léa Manon Inès Sarah Juliette Louise Jade Zoé Clara Margaux Pauline Mathilde Élodie Hélène Claire Agnès Jacqueline Danielle Simone Odile Mireille Geneviève""".split(),
    masculine="""Jean Pierre Michel Philippe Alain Nicolas Christophe Patrick Daniel Bernard Éric Frédéric Laurent Stéphane David Olivier Sébastien Thierry Julien Pascal Jacques François Vincent Guillaume Thomas Antoine Hugo Lucas Louis Gabriel Arthur Raphaël Mathis Théo Maxime Alexandre Romain Mathieu Benoît Yves Gérard Henri Didier Serge Claude Luc Rémi Fabrice Emmanuel Bruno""".split(),
    surname="""Martin Bernard Dubois Thomas Robert Richard Petit Durand Leroy Moreau Simon Laurent Lefebvre Michel Garcia David Bertrand Roux Vincent Fournier Morel Girard André Lefèvre Mercier Dupont Lambert Bonnet François Martinez Legrand Garnier Faure Rousseau Blanc Guérin Muller Henry Roussel Nicolas Perrin Morin Mathieu Clément Gauthier Dumont Lopez Fontaine Chevalier Robin""".split(),
    city="""Paris|Marseille|Lyon|Toulouse|Nice|Nantes|Strasbourg|Montpellier|Bordeaux|Lille|Rennes|Reims|Le Havre|Saint-Étienne|Toulon|Grenoble|Dijon|Angers|Nîmes|Villeurbanne|Clermont-Ferrand|Le Mans|Aix-en-Provence|Brest|Tours|Amiens|Limoges|Annecy|Perpignan|Boulogne-Billancourt|Metz|Besançon|Orléans|Rouen|Mulhouse|Caen|Nancy|Argenteuil|Montreuil|Roubaix|Tourcoing|Avignon|Poitiers|Versailles|Pau|La Rochelle|Calais|Cannes|Colmar|Bayonne|Valence""".split("|"),
    state="""Auvergne-Rhône-Alpes|Bourgogne-Franche-Comté|Bretagne|Centre-Val de Loire|Corse|Grand Est|Hauts-de-France|Île-de-France|Normandie|Nouvelle-Aquitaine|Occitanie|Pays de la Loire|Provence-Alpes-Côte d'Azur|Ain|Aisne|Allier|Ardèche|Ardennes|Ariège|Aube|Aude|Aveyron|Calvados|Cantal|Charente|Cher|Corrèze|Côte-d'Or|Creuse|Dordogne|Doubs|Drôme|Eure|Finistère|Gard|Gers|Gironde|Hérault|Isère|Jura|Landes|Loiret|Lot|Lozère|Manche|Marne|Mayenne|Meuse|Morbihan|Moselle|Nièvre|Oise|Orne""".split("|"),
    streets="de la République|Victor Hugo|Jean Jaurès|de la Paix|Pasteur|du Général de Gaulle|des Lilas|de Verdun|Gambetta|Voltaire|de la Gare|Nationale|du Moulin|de l'Église|des Écoles|Carnot|Foch|Émile Zola|Jules Ferry|du Château".split("|"),
    street_suffix="rue|avenue|boulevard|place".split("|"),
    address_formats=["{num} {suffix} {street}", "{num}, {suffix} {street}"],
    hospital_formats=["Hôpital {saint}", "Centre Hospitalier de {city}", "CHU de {city}", "Clinique {surname}"],
    company_formats=["{surname} SA", "{surname} et Fils", "Groupe {surname}", "{surname} SARL"],
    university_formats=["Université de {city}", "Université {city} Sud", "Institut Polytechnique de {city}"],
    email_first="marie jean pierre sophie nicolas julie camille thomas".split(),
    email_last="martin bernard dubois petit durand moreau".split(),
    email_domain="orange.fr free.fr laposte.net gmail.com sfr.fr".split(),
    phone=["0# ## ## ## ##", "+33 # ## ## ## ##"],
    date=["{dd}/{mm}/{yyyy}", "{dd}.{mm}.{yyyy}"],
    email=["{user}@{domain}"],
    other=["# ## ## ## ### ### ##", "##########"],
    name_format="{first} {last}",
    countries="""France|Allemagne|Espagne|Italie|Portugal|Belgique|Suisse|Luxembourg|Royaume-Uni|Irlande|Pays-Bas|Autriche|Suède|Norvège|Danemark|Finlande|Pologne|Grèce|Turquie|Russie|Ukraine|Maroc|Algérie|Tunisie|Égypte|Sénégal|Mali|Côte d'Ivoire|Cameroun|Madagascar|Congo|Haïti|États-Unis|Canada|Mexique|Brésil|Argentine|Chili|Colombie|Pérou|Chine|Japon|Inde|Viêt Nam|Cambodge|Liban|Syrie|Australie|Nouvelle-Zélande|Afrique du Sud|Nigéria""".split("|"),
    saints="Saint-Louis|Saint-Antoine|Sainte-Anne|Necker|Lariboisière|Saint-Joseph|Bichat|Cochin|de la Pitié-Salpêtrière|Tenon".split("|"),
)

ZH = dict(
    feminine="""秀英 桂英 秀兰 玉兰 桂兰 秀珍 凤英 玉珍 玉英 兰英 玉梅 凤兰 丽 敏 静 丽娟 艳 娟 霞 燕 芳 婷 雪梅 晶 倩 玲 丹 红 萍 颖 洁 琳 欣 慧 莉 雪 梅 丽华 淑珍 海燕 秀梅 桂芳 丽萍 春梅 佳怡 雨涵 婧 媛 璐 瑶 思琪 诗涵""".split(),
    masculine="""伟 强 磊 军 洋 勇 杰 涛 明 超 刚 平 辉 鹏 华 飞 鑫 波 斌 宇 浩 凯 健 俊 帆 帅 旭 宁 龙 林 欢 阳 建华 建国 建平 志强 志明 国强 国华 海 峰 建军 晓东 文 亮 成 东 子轩""".split(),
    surname="""王 李 张 刘 陈 杨 黄 赵 吴 周 徐 孙 马 朱 胡 郭 何 高 罗 郑 梁 谢 宋 唐 许 韩 冯 邓 曹 彭 曾 肖 田 董 袁 潘 于 蒋 蔡 余 杜 叶 程 苏 魏 吕 丁 任 沈 姚""".split(),
    city="""北京 上海 天津 重庆 广州 深圳 成都 杭州 武汉 西安 南京 苏州 郑州 长沙 沈阳 青岛 宁波 东莞 无锡 佛山 合肥 大连 福州 厦门 哈尔滨 济南 温州 长春 石家庄 常州 泉州 南宁 贵阳 南昌 南通 金华 徐州 太原 嘉兴 烟台 惠州 保定 台州 中山 绍兴 乌鲁木齐 潍坊 兰州 珠海 昆明 海口 拉萨 银川 西宁 呼和浩特""".split(),
    state="""河北省 山西省 辽宁省 吉林省 黑龙江省 江苏省 浙江省 安徽省 福建省 江西省 山东省 河南省 湖北省 湖南省 广东省 海南省 四川省 贵州省 云南省 陕西省 甘肃省 青海省 台湾省 内蒙古自治区 广西壮族自治区 西藏自治区 宁夏回族自治区 新疆维吾尔自治区 北京市 天津市 上海市 重庆市 香港特别行政区 澳门特别行政区""".split(),
    streets="人民 解放 中山 建设 和平 文化 胜利 长江 黄河 新华 东风 青年 光明 复兴 朝阳 幸福 迎宾 滨江 学府 春风".split(),
    street_suffix="路 街 大道".split(),
    address_formats=["{street}{suffix}{num}号"],
    hospital_formats=["{city}市人民医院", "{city}市中医院", "{city}市第一人民医院", "{city}市中心医院", "{city}市妇幼保健院"],
    company_formats=["{city}{word}科技有限公司", "{city}{word}贸易有限公司", "{word}集团有限公司"],
    company_words="创新 宏达 恒信 天成 金鼎 海纳 瑞丰 博远 华信 鼎盛 新元 长城".split(),
    university_formats=["{city}大学", "{city}医科大学", "{city}师范大学", "{city}理工大学"],
    email_first="wang li zhang liu chen yang huang zhao wu zhou".split(),
    email_last="wei fang na min jing lei yang jie tao ming".split(),
    email_sep="",
    email_domain="163.com qq.com 126.com sina.com sohu.com".split(),
    phone=["13#########", "15#########", "18#########", "0##-########", "+86 13# #### ####"],
    date=["{yyyy}-{mm}-{dd}", "{yyyy}/{mm}/{dd}", "{yyyy}年{m}月{d}日"],
    email=["{user}@{domain}", "{user}##@{domain}"],
    other=["##########", "%#################"],
    name_format="{last}{first}",
    countries=None,
    saints=[],
)

HI = dict(
    feminine="""प्रिया अनीता सुनीता पूजा नेहा अंजलि कविता रेखा सीमा ममता गीता सरिता ज्योति मीना आरती दीपिका निशा रीता शालिनी स्वाति सोनिया राधा लक्ष्मी सरस्वती पार्वती उषा आशा मधु अर्चना वंदना रश्मि श्वेता मोनिका पल्लवी नीलम संगीता कोमल प्रियंका अदिति ऐश्वर्या माधुरी हेमा जया लता सुधा शोभा कमला इंदु""".split(),
    masculine="""राहुल अमित सुनील अनिल राजेश विजय संजय अजय रमेश सुरेश महेश दिनेश मनोज विनोद अशोक प्रकाश राकेश मुकेश नरेश दीपक आलोक अरुण वरुण करण अर्जुन रोहित मोहित सचिन सौरभ गौरव विकास आकाश राजीव प्रदीप संदीप कुलदीप हर्ष अभिषेक आदित्य विशाल निखिल अंकित तरुण पंकज नितिन""".split(),
    surname="""शर्मा वर्मा गुप्ता सिंह कुमार यादव पटेल जैन अग्रवाल मिश्रा पांडे तिवारी श्रीवास्तव चौहान ठाकुर राठौर मेहता शाह जोशी त्रिपाठी दुबे सक्सेना भाटिया मल्होत्रा कपूर खन्ना चोपड़ा बंसल गोयल मित्तल रेड्डी नायर मेनन पिल्लै अय्यर राव देसाई कुलकर्णी पाटिल चौधरी बघेल सेठी अरोड़ा बत्रा गिल संधू""".split(),
    city="""दिल्ली मुंबई कोलकाता चेन्नई बेंगलुरु हैदराबाद अहमदाबाद पुणे सूरत जयपुर लखनऊ कानपुर नागपुर इंदौर भोपाल पटना वडोदरा लुधियाना आगरा नासिक फरीदाबाद मेरठ राजकोट वाराणसी श्रीनगर औरंगाबाद धनबाद अमृतसर प्रयागराज रांची हावड़ा जबलपुर ग्वालियर विजयवाड़ा जोधपुर मदुरै रायपुर कोटा गुवाहाटी चंडीगढ़ सोलापुर बरेली मुरादाबाद मैसूर गुरुग्राम अलीगढ़ जालंधर भुवनेश्वर सलेम देहरादून उदयपुर""".split(),
    state="""आंध्र प्रदेश|अरुणाचल प्रदेश|असम|बिहार|छत्तीसगढ़|गोवा|गुजरात|हरियाणा|हिमाचल प्रदेश|झारखंड|कर्नाटक|केरल|मध्य प्रदेश|महाराष्ट्र|मणिपुर|मेघालय|मिजोरम|नागालैंड|ओडिशा|पंजाब|राजस्थान|सिक्किम|तमिलनाडु|तेलंगाना|त्रिपुरा|उत्तर प्रदेश|उत्तराखंड|पश्चिम बंगाल""".split("|"),
    streets="गांधी नेहरू पटेल तिलक सुभाष शास्त्री अम्बेडकर राजेंद्र टैगोर विवेकानंद".split(),
    street_suffix="मार्ग नगर".split(),
    address_formats=["{num}, {street} {suffix}"],
    hospital_formats=["{city} जिला अस्पताल", "{city} मेडिकल कॉलेज अस्पताल", "{surname} अस्पताल", "{city} सिविल अस्पताल"],
    company_formats=["{surname} एंड संस", "{surname} इंडस्ट्रीज", "{surname} प्राइवेट लिमिटेड"],
    university_formats=["{city} विश्वविद्यालय", "{city} चिकित्सा विश्वविद्यालय"],
    email_first="priya anita rahul amit sunil pooja neha vijay deepak kavita".split(),
    email_last="sharma verma gupta singh kumar patel".split(),
    email_domain="gmail.com yahoo.co.in rediffmail.com hotmail.com".split(),
    phone=["+91 9#########", "+91 8#########", "9#########", "0##-########"],
    date=["{dd}-{mm}-{yyyy}", "{dd}/{mm}/{yyyy}"],
    email=["{user}@{domain}"],
    other=["#### #### ####", "##########"],
    name_format="{first} {last}",
    countries=None,
    saints=[],
)

BN = dict(
    feminine="""ফাতেমা আয়েশা নুসরাত তাসলিমা শারমিন সুমাইয়া রুমানা সাবরিনা নাসরিন ফারহানা জান্নাত মরিয়ম সালমা রহিমা শাহনাজ মাহমুদা তানিয়া সাদিয়া রিয়া প্রিয়াঙ্কা মিতা দীপা সুমি লিপি পাপিয়া শিউলি রুমা মৌসুমী অর্পিতা তৃষা ঝুমা বৃষ্টি সুরাইয়া নাদিয়া আফরোজা হাসিনা খাদিজা রাবেয়া জাহানারা শিরিন""".split(),
    masculine="""মোহাম্মদ আব্দুল রহিম জামাল কামাল রফিক শফিক হাসান আলী মাহমুদ রাকিব সাকিব তানভীর ফাহিম নাঈম ইমরান আরিফ সোহেল রুবেল জাহিদ মাসুদ শাহীন মিজান হাবিব রাজু বিপ্লব সুমন অমিত প্রদীপ সুব্রত দেবাশীষ অনিক রাহাত সজীব শুভ তন্ময় ফয়সাল নাহিদ রিয়াদ""".split(),
    surname="""রহমান হোসেন ইসলাম আহমেদ খান চৌধুরী উদ্দিন আলম মিয়া সরকার দাস রায় সাহা দত্ত বসু ঘোষ চক্রবর্তী মুখার্জি ব্যানার্জি ভট্টাচার্য সেন পাল মন্ডল বিশ্বাস হালদার শেখ কাজী তালুকদার মজুমদার ভূঁইয়া সিদ্দিকী হক কবির প্রামানিক আকন্দ""".split(),
    city="""ঢাকা চট্টগ্রাম খুলনা রাজশাহী সিলেট বরিশাল রংপুর ময়মনসিংহ কুমিল্লা গাজীপুর নারায়ণগঞ্জ বগুড়া যশোর দিনাজপুর কক্সবাজার টাঙ্গাইল ফরিদপুর পাবনা নোয়াখালী কুষ্টিয়া ব্রাহ্মণবাড়িয়া সিরাজগঞ্জ জামালপুর নরসিংদী চাঁদপুর ফেনী সাতক্ষীরা নওগাঁ নাটোর ঠাকুরগাঁও মানিকগঞ্জ মুন্সীগঞ্জ গোপালগঞ্জ মাদারীপুর শরীয়তপুর কিশোরগঞ্জ নেত্রকোণা শেরপুর হবিগঞ্জ মৌলভীবাজার সুনামগঞ্জ ভোলা পটুয়াখালী বাগেরহাট নড়াইল মাগুরা ঝিনাইদহ চুয়াডাঙ্গা মেহেরপুর লালমনিরহাট""".split(),
    state="""ঢাকা বিভাগ|চট্টগ্রাম বিভাগ|খুলনা বিভাগ|রাজশাহী বিভাগ|সিলেট বিভাগ|বরিশাল বিভাগ|রংপুর বিভাগ|ময়মনসিংহ বিভাগ""".split("|"),
    streets="মিরপুর ধানমন্ডি গুলশান বনানী মোহাম্মদপুর উত্তরা শাহবাগ মতিঝিল কাকরাইল ফার্মগেট".split(),
    street_suffix="সড়ক রোড".split(),
    address_formats=["{num} {street} {suffix}", "বাড়ি {num}, {street} {suffix}"],
    hospital_formats=["{city} সদর হাসপাতাল", "{city} মেডিকেল কলেজ হাসপাতাল", "{city} জেনারেল হাসপাতাল"],
    company_formats=["{surname} গ্রুপ", "{surname} এন্টারপ্রাইজ", "{surname} ট্রেডার্স"],
    university_formats=["{city} বিশ্ববিদ্যালয়", "{city} মেডিকেল বিশ্ববিদ্যালয়"],
    email_first="rahim karim fatema ayesha nusrat hasan jamal tanvir".split(),
    email_last="rahman hossain islam ahmed khan chowdhury".split(),
    email_domain="gmail.com yahoo.com hotmail.com".split(),
    phone=["+880 1%########", "01%########"],
    date=["{dd}/{mm}/{yyyy}", "{dd}-{mm}-{yyyy}"],
    email=["{user}@{domain}"],
    other=["#############", "##########"],
    name_format="{first} {last}",
    countries=None,
    saints=[],
)
